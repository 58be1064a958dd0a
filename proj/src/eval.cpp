#include "ccgs/eval.hpp"

#include <map>

#include "ccgs/game.hpp"

namespace ccgs {

namespace {

using ltl::Formula;
using ltl::Op;

// Per-position truth values over stem + one loop copy; Until resolved on the
// loop by a backward pass over two unrolled periods (any witness on a
// periodic word lies within one period of its start position).
class LassoEval {
public:
    LassoEval(const Lasso& lasso,
              const std::vector<std::set<std::string>>& labels_by_state) {
        for (StateId s : lasso.stem) letters_.push_back(labels_by_state[s]);
        for (StateId s : lasso.loop) letters_.push_back(labels_by_state[s]);
        stem_ = lasso.stem.size();
        loop_ = lasso.loop.size();
    }

    bool value(const Formula& f) { return vals(f)[0] != 0; }

private:
    std::vector<std::set<std::string>> letters_;
    std::size_t stem_ = 0, loop_ = 0;
    std::map<const ltl::Node*, std::vector<char>> memo_;

    std::size_t n() const { return stem_ + loop_; }
    std::size_t succ(std::size_t t) const { return t + 1 < n() ? t + 1 : stem_; }

    const std::vector<char>& vals(const Formula& f) {
        auto it = memo_.find(f.get());
        if (it != memo_.end()) return it->second;
        std::vector<char> v(n(), 0);
        switch (f->op) {
            case Op::True:
                v.assign(n(), 1);
                break;
            case Op::False:
                break;
            case Op::Atom:
                for (std::size_t t = 0; t < n(); ++t)
                    v[t] = letters_[t].count(f->atom) ? 1 : 0;
                break;
            case Op::Not: {
                const auto& a = vals(f->lhs);
                for (std::size_t t = 0; t < n(); ++t) v[t] = !a[t];
                break;
            }
            case Op::And: {
                const auto& a = vals(f->lhs);
                const auto& b = vals(f->rhs);
                for (std::size_t t = 0; t < n(); ++t) v[t] = a[t] && b[t];
                break;
            }
            case Op::Or: {
                const auto& a = vals(f->lhs);
                const auto& b = vals(f->rhs);
                for (std::size_t t = 0; t < n(); ++t) v[t] = a[t] || b[t];
                break;
            }
            case Op::Next: {
                const auto& a = vals(f->lhs);
                for (std::size_t t = 0; t < n(); ++t) v[t] = a[succ(t)];
                break;
            }
            case Op::Until: {
                const auto& a = vals(f->lhs);
                const auto& b = vals(f->rhs);
                // Loop positions over a doubled unrolling.
                std::vector<char> u(2 * loop_ + 1, 0);
                for (std::size_t i = 2 * loop_; i-- > 0;) {
                    std::size_t t = stem_ + i % loop_;
                    u[i] = b[t] || (a[t] && u[i + 1]);
                }
                for (std::size_t i = 0; i < loop_; ++i) v[stem_ + i] = u[i];
                for (std::size_t t = stem_; t-- > 0;)
                    v[t] = b[t] || (a[t] && v[t + 1 < n() ? t + 1 : stem_]);
                break;
            }
        }
        return memo_.emplace(f.get(), std::move(v)).first->second;
    }
};

}  // namespace

bool eval_on_lasso(const ltl::Formula& f, const Lasso& lasso,
                   const std::vector<std::set<std::string>>& labels_by_state) {
    return LassoEval(lasso, labels_by_state).value(f);
}

bool eval_on_lasso(const ltl::Formula& f, const Lasso& lasso, const Game& game) {
    if (!successor_consistent(game.m, lasso))
        throw GameError("lasso is not successor-consistent with the game");
    std::vector<std::set<std::string>> labels(game.m.num_states());
    for (StateId s = 0; s < game.m.num_states(); ++s) labels[s] = game.label_names(s);
    return eval_on_lasso(f, lasso, labels);
}

}  // namespace ccgs
