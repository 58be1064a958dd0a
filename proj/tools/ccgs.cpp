// Command line front end. Exit codes: 0 = HOLDS/true, 1 = FAILS/false,
// 2 = BOUND_LIMITED, 3 = usage or format error.

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccgs/bisim.hpp"
#include "ccgs/coop_ltl.hpp"
#include "ccgs/eval.hpp"
#include "ccgs/gen.hpp"
#include "ccgs/io.hpp"
#include "ccgs/mp.hpp"

namespace {

using namespace ccgs;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Game load_game(const std::string& path) { return parse_game(read_file(path)); }

StrategyProfile load_profile(const std::string& path, const Game& game) {
    return parse_profile(read_file(path), game);
}

std::vector<int> parse_coalition(const std::string& text, const Game& game) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int agent = 0;
        try {
            agent = std::stoi(item);
        } catch (const std::exception&) {
            throw Usage("bad coalition entry: " + item);
        }
        if (agent < 1 || agent > game.m.num_agents)
            throw Usage("agent out of range in coalition: " + item);
        out.push_back(agent - 1);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw Usage("empty coalition");
    return out;
}

// Strategy file covering exactly the coalition, returned in coalition order.
std::vector<Strategy> load_deviation(const std::string& path, const Game& game,
                                     const std::vector<int>& coalition) {
    auto pairs = parse_strategies(read_file(path), game);
    std::map<int, Strategy> by_agent;
    for (auto& [agent, st] : pairs) {
        if (by_agent.count(agent))
            throw Usage("agent " + std::to_string(agent + 1) +
                        " appears twice in the deviation file");
        by_agent.emplace(agent, std::move(st));
    }
    std::vector<Strategy> out;
    for (int i : coalition) {
        auto it = by_agent.find(i);
        if (it == by_agent.end())
            throw Usage("deviation file misses coalition agent " +
                        std::to_string(i + 1));
        out.push_back(it->second);
        by_agent.erase(it);
    }
    if (!by_agent.empty())
        throw Usage("deviation file covers agents outside the coalition");
    return out;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)),
                        BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw Usage("bad rational: " + text);
    }
}

PayoffVector parse_vector(const std::string& text) {
    PayoffVector out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw Usage("empty threshold vector");
    return out;
}

int report(const Game& game, const Verdict& v, bool json) {
    if (json) {
        std::cout << verdict_to_json(game, v) << "\n";
    } else {
        std::cout << "status: " << status_name(v.status) << "\n";
        if (v.bound > 0) std::cout << "bound: " << v.bound << "\n";
        if (!v.note.empty()) std::cout << "note: " << v.note << "\n";
        if (v.agent) std::cout << "agent: " << *v.agent + 1 << "\n";
        if (v.lasso)
            std::cout << "witness lasso: " << lasso_to_string(game, *v.lasso)
                      << "\n";
        if (v.deviation) {
            std::cout << "witness coalition:";
            for (int i : v.deviation->coalition) std::cout << " " << i + 1;
            std::cout << "\n";
            std::vector<std::pair<int, Strategy>> pairs;
            for (std::size_t ci = 0; ci < v.deviation->coalition.size(); ++ci)
                pairs.emplace_back(v.deviation->coalition[ci],
                                   v.deviation->strategies[ci]);
            std::cout << print_strategies(game, pairs);
        }
    }
    switch (v.status) {
        case Status::Holds:
            return 0;
        case Status::Fails:
            return 1;
        default:
            return 2;
    }
}

// Bounded searches on one-shot sink games are exhaustive, so a bound-limited
// miss is a definitive no.
Verdict sink_exact(const Game& game, Verdict v) {
    if (v.bound_limited() && v.bound >= 1 && is_one_shot_sink_game(game.m)) {
        v.status = Status::Fails;
        v.note = "exhaustive at bound on a one-shot sink game";
    }
    return v;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"rational verification for cooperative concurrent games"};
    app.require_subcommand(1);

    std::string game_path, game_path_b, profile_path, deviation_path;
    std::string phi_text, coalition_text, z_text, out_path, profile_out;
    std::string example_name, dimacs_path, family = "sink-ltl";
    int bound = 1, jobs = 1;
    bool json = false, strict = false;
    RandomGameParams rp;
    std::uint64_t seed = 0;

    auto add_game = [&](CLI::App* c) {
        c->add_option("game", game_path, "game file")->required();
    };
    auto add_json = [&](CLI::App* c) { c->add_flag("--json", json); };
    auto add_bound = [&](CLI::App* c) {
        c->add_option("--bound", bound, "memory bound (machine states)");
    };

    CLI::App* validate = app.add_subcommand("validate", "check a game file");
    add_game(validate);

    CLI::App* run = app.add_subcommand("run", "run a strategy profile");
    add_game(run);
    run->add_option("--profile", profile_path)->required();
    add_json(run);

    CLI::App* dev = app.add_subcommand("deviation", "check a beneficial deviation");
    add_game(dev);
    dev->add_option("--profile", profile_path)->required();
    dev->add_option("--coalition", coalition_text)->required();
    dev->add_option("--deviation", deviation_path)->required();
    add_json(dev);

    CLI::App* sdev =
        app.add_subcommand("strong-deviation", "check a strong beneficial deviation");
    add_game(sdev);
    sdev->add_option("--profile", profile_path)->required();
    sdev->add_option("--coalition", coalition_text)->required();
    sdev->add_option("--deviation", deviation_path)->required();
    add_json(sdev);

    CLI::App* ful = app.add_subcommand("fulfilled", "search a winning coalition strategy");
    add_game(ful);
    ful->add_option("--coalition", coalition_text)->required();
    add_bound(ful);
    add_json(ful);

    CLI::App* core = app.add_subcommand("core-member", "core membership");
    add_game(core);
    core->add_option("--profile", profile_path)->required();
    add_bound(core);
    add_json(core);

    CLI::App* score = app.add_subcommand("strong-core-member", "strong core membership");
    add_game(score);
    score->add_option("--profile", profile_path)->required();
    add_bound(score);
    add_json(score);

    CLI::App* ecore = app.add_subcommand("e-core", "does some core run satisfy phi");
    add_game(ecore);
    ecore->add_option("--phi", phi_text)->required();
    add_bound(ecore);
    add_json(ecore);

    CLI::App* acore = app.add_subcommand("a-core", "do all core runs satisfy phi");
    add_game(acore);
    acore->add_option("--phi", phi_text)->required();
    add_bound(acore);
    add_json(acore);

    CLI::App* scs = app.add_subcommand("strong-core-search",
                                       "table of strong-core verdicts per profile");
    add_game(scs);
    add_bound(scs);
    scs->add_option("--jobs", jobs, "worker threads");

    CLI::App* mdev = app.add_subcommand("mp-deviation", "mean-payoff deviation");
    add_game(mdev);
    mdev->add_option("--profile", profile_path)->required();
    mdev->add_option("--coalition", coalition_text);
    mdev->add_option("--deviation", deviation_path);

    CLI::App* mcore = app.add_subcommand("mp-core-member", "mean-payoff core membership");
    add_game(mcore);
    mcore->add_option("--profile", profile_path)->required();

    CLI::App* mec = app.add_subcommand("mp-e-core", "find a mean-payoff core member");
    add_game(mec);

    CLI::App* lb = app.add_subcommand("lower-bound", "can a coalition guarantee z");
    add_game(lb);
    lb->add_option("--coalition", coalition_text)->required();
    lb->add_option("--z", z_text, "comma-separated rationals, one per member")
        ->required();
    lb->add_flag("--strict", strict);

    CLI::App* bis = app.add_subcommand("bisim", "bisimilarity of two games");
    bis->add_option("game", game_path)->required();
    bis->add_option("other", game_path_b)->required();

    CLI::App* gen = app.add_subcommand("gen", "generate games");
    gen->require_subcommand(1);
    CLI::App* gex = gen->add_subcommand("example", "built-in example game");
    gex->add_option("name", example_name)->required();
    gex->add_option("--out", out_path);
    gex->add_option("--profiles", profile_out, "directory for reference profiles");
    CLI::App* gcnf = gen->add_subcommand("cnf", "3SAT reduction game");
    gcnf->add_option("--dimacs", dimacs_path)->required();
    gcnf->add_option("--out", out_path);
    gcnf->add_option("--profile-out", profile_out);
    CLI::App* grand = gen->add_subcommand("random", "seeded random game");
    grand->add_option("--family", family)->check(
        CLI::IsMember({"sink-ltl", "general-ltl", "mp"}));
    grand->add_option("--agents", rp.agents);
    grand->add_option("--states", rp.states);
    grand->add_option("--actions", rp.actions);
    grand->add_option("--max-weight", rp.max_weight);
    grand->add_option("--seed", seed);
    grand->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    auto emit = [&](const std::string& text) {
        if (out_path.empty())
            std::cout << text;
        else
            write_file(out_path, text);
    };

    if (*validate) {
        load_game(game_path);
        std::cout << "ok\n";
        return 0;
    }
    if (*run) {
        Game game = load_game(game_path);
        StrategyProfile profile = load_profile(profile_path, game);
        Lasso lasso = run_of(game, profile);
        if (json) {
            Verdict v;
            v.status = Status::Holds;
            v.lasso = lasso;
            std::cout << verdict_to_json(game, v) << "\n";
        } else {
            std::cout << "run: " << lasso_to_string(game, lasso) << "\n";
            if (game.flavour == Flavour::Ltl) {
                WinnerSet ws = winners(game, lasso);
                std::cout << "winners:";
                for (int i : ws.winners) std::cout << " " << i + 1;
                std::cout << "\nlosers:";
                for (int i : ws.losers) std::cout << " " << i + 1;
                std::cout << "\n";
            } else {
                PayoffVector pay = mp_of_lasso(game, lasso);
                std::cout << "payoffs:";
                for (const Rational& r : pay) std::cout << " " << rat_to_string(r);
                std::cout << "\n";
            }
        }
        return 0;
    }
    if (*dev || *sdev) {
        Game game = load_game(game_path);
        StrategyProfile profile = load_profile(profile_path, game);
        std::vector<int> coalition = parse_coalition(coalition_text, game);
        std::vector<Strategy> strategies =
            load_deviation(deviation_path, game, coalition);
        Verdict v = *dev ? is_beneficial_deviation(game, profile, coalition,
                                                   strategies)
                         : is_strong_beneficial_deviation(game, profile,
                                                          coalition, strategies);
        return report(game, v, json);
    }
    if (*ful) {
        Game game = load_game(game_path);
        std::vector<int> coalition = parse_coalition(coalition_text, game);
        return report(game, sink_exact(game, is_fulfilled(game, coalition, bound)),
                      json);
    }
    if (*core) {
        Game game = load_game(game_path);
        StrategyProfile profile = load_profile(profile_path, game);
        return report(game, core_membership(game, profile, bound), json);
    }
    if (*score) {
        Game game = load_game(game_path);
        StrategyProfile profile = load_profile(profile_path, game);
        return report(game, strong_core_membership(game, profile, bound), json);
    }
    if (*ecore || *acore) {
        Game game = load_game(game_path);
        ltl::Formula phi = ltl::parse(phi_text);
        Verdict v = *ecore ? e_core(game, phi, bound) : a_core(game, phi, bound);
        return report(game, v, json);
    }
    if (*scs) {
        Game game = load_game(game_path);
        StrongCoreReport rep = strong_core_empty_search(game, bound, jobs);
        std::cout << "empty-at-bound: " << (rep.empty_at_bound ? "true" : "false")
                  << "\n";
        std::cout << "exact: " << (rep.exact ? "true" : "false") << "\n";
        std::cout << "rows: " << rep.rows.size() << "\n";
        for (const StrongCoreRow& row : rep.rows) {
            std::cout << "profile";
            for (std::size_t i = 0; i < row.initial_actions.size(); ++i)
                std::cout << (i ? "," : " ")
                          << game.m.action_names[i][row.initial_actions[i]];
            std::cout << " winners";
            for (int i : row.winner_set.winners) std::cout << " " << i + 1;
            std::cout << " verdict " << status_name(row.verdict.status);
            if (row.verdict.fails() && row.verdict.deviation) {
                std::cout << " deviators";
                for (int i : row.verdict.deviation->coalition)
                    std::cout << " " << i + 1;
            }
            std::cout << "\n";
        }
        if (!rep.empty_at_bound) return 1;
        return rep.exact ? 0 : 2;
    }
    if (*mdev) {
        Game game = load_game(game_path);
        StrategyProfile profile = load_profile(profile_path, game);
        if (!coalition_text.empty()) {
            if (deviation_path.empty())
                throw Usage("--coalition needs --deviation");
            std::vector<int> coalition = parse_coalition(coalition_text, game);
            std::vector<Strategy> strategies =
                load_deviation(deviation_path, game, coalition);
            bool yes =
                mp_is_beneficial_deviation(game, profile, coalition, strategies);
            std::cout << (yes ? "beneficial" : "not beneficial") << "\n";
            return yes ? 0 : 1;
        }
        auto found = mp_beneficial_deviation_exists(game, profile);
        if (!found) {
            std::cout << "no beneficial deviation\n";
            return 1;
        }
        std::cout << "coalition:";
        for (int i : found->coalition) std::cout << " " << i + 1;
        std::cout << "\n";
        std::vector<std::pair<int, Strategy>> pairs;
        for (std::size_t ci = 0; ci < found->coalition.size(); ++ci)
            pairs.emplace_back(found->coalition[ci], found->strategies[ci]);
        std::cout << print_strategies(game, pairs);
        return 0;
    }
    if (*mcore) {
        Game game = load_game(game_path);
        StrategyProfile profile = load_profile(profile_path, game);
        bool member = mp_core_membership(game, profile);
        std::cout << (member ? "member" : "not a member") << "\n";
        return member ? 0 : 1;
    }
    if (*mec) {
        Game game = load_game(game_path);
        auto found = mp_e_core(game);
        if (!found) {
            std::cout << "core is empty over memoryless profiles\n";
            return 1;
        }
        std::cout << "payoffs:";
        for (const Rational& r : found->payoff)
            std::cout << " " << rat_to_string(r);
        std::cout << "\n";
        std::vector<std::pair<int, Strategy>> pairs;
        for (int i = 0; i < game.m.num_agents; ++i)
            pairs.emplace_back(i, found->profile[i]);
        std::cout << print_strategies(game, pairs);
        return 0;
    }
    if (*lb) {
        Game game = load_game(game_path);
        std::vector<int> coalition = parse_coalition(coalition_text, game);
        PayoffVector z = parse_vector(z_text);
        if (z.size() != coalition.size())
            throw Usage("threshold vector length must match the coalition");
        bool yes = is_lower_bound(game, coalition, z, strict);
        std::cout << (yes ? "lower bound" : "not a lower bound") << "\n";
        return yes ? 0 : 1;
    }
    if (*bis) {
        Game a = load_game(game_path);
        Game b = load_game(game_path_b);
        auto rel = bisimilar(a, b);
        if (!rel) {
            std::cout << "not bisimilar\n";
            return 1;
        }
        std::cout << "bisimilar, " << rel->pairs.size() << " related pairs\n";
        return 0;
    }
    if (*gex) {
        ExampleBundle bundle = build_example(example_name);
        emit(print_game(bundle.game));
        if (!profile_out.empty()) {
            for (const auto& [name, profile] : bundle.profiles) {
                std::vector<std::pair<int, Strategy>> pairs;
                for (int i = 0; i < bundle.game.m.num_agents; ++i)
                    pairs.emplace_back(i, profile[i]);
                write_file(profile_out + "/" + example_name + "." + name + ".strat",
                           print_strategies(bundle.game, pairs));
            }
        }
        return 0;
    }
    if (*gcnf) {
        Cnf cnf = parse_dimacs(read_file(dimacs_path));
        auto [game, reference] = cnf_to_mp_game(cnf);
        emit(print_game(game));
        if (!profile_out.empty()) {
            std::vector<std::pair<int, Strategy>> pairs;
            for (int i = 0; i < game.m.num_agents; ++i)
                pairs.emplace_back(i, reference[i]);
            write_file(profile_out, print_strategies(game, pairs));
        }
        return 0;
    }
    if (*grand) {
        emit(print_game(random_game(family, rp, seed)));
        return 0;
    }
    throw Usage("no subcommand handled");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const Usage& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ltl::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const GameError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
