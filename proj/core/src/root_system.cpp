#include "latorus/root_system.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace latorus {

RootSystemA::RootSystemA(int ell) : ell_(ell) {
    if (ell < 2) throw AlgebraError("root system: need ell >= 2");
    for (int i = 1; i <= ell_ + 1; ++i)
        for (int j = 1; j <= ell_ + 1; ++j)
            if (i != j) roots_.push_back(Root::pair(i, j));
}

Root RootSystemA::simple(int k) const {
    if (k < 1 || k > ell_) throw AlgebraError("root system: simple index out of range");
    return Root::pair(k, k + 1);
}

bool RootSystemA::contains(const Root& r) const {
    if (r.is_zero()) return true;
    return r.i() <= ell_ + 1 && r.j() <= ell_ + 1;
}

namespace {
// Inner product of eps_i - eps_j vectors; all roots have squared length 2,
// so the Cartan integer equals the plain inner product.
int eps_dot(const Root& a, const Root& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    auto d = [](int x, int y) { return x == y ? 1 : 0; };
    return d(a.i(), b.i()) - d(a.i(), b.j()) - d(a.j(), b.i()) + d(a.j(), b.j());
}
}  // namespace

int RootSystemA::cartan_integer(const Root& beta, const Root& alpha) const {
    if (alpha.is_zero()) throw ZeroCoroot("cartan integer: zero root has no coroot");
    return eps_dot(beta, alpha);
}

std::optional<Root> RootSystemA::sum(const Root& beta, const Root& gamma) const {
    if (beta.is_zero()) return gamma;
    if (gamma.is_zero()) return beta;
    if (beta == -gamma) return Root::zero();
    // eps_i - eps_j + eps_k - eps_l is a root iff j == k or l == i.
    if (beta.j() == gamma.i() && beta.i() != gamma.j()) return Root::pair(beta.i(), gamma.j());
    if (gamma.j() == beta.i() && gamma.i() != beta.j()) return Root::pair(gamma.i(), beta.j());
    return std::nullopt;
}

std::vector<Root> RootSystemA::span_roots(const Root& beta, const Root& gamma) const {
    // rho = a*beta + b*gamma with integer a, b; in type A any such root has
    // |a|, |b| <= 1, but sweep a slightly larger box and verify exactly.
    std::vector<Root> out;
    for (const Root& rho : roots_) {
        bool in_span = false;
        for (int a = -2; a <= 2 && !in_span; ++a) {
            for (int b = -2; b <= 2 && !in_span; ++b) {
                std::vector<int> v(ell_ + 2, 0);
                auto add = [&](const Root& r, int c) {
                    if (!r.is_zero()) {
                        v[r.i()] += c;
                        v[r.j()] -= c;
                    }
                };
                add(beta, a);
                add(gamma, b);
                add(rho, -1);
                in_span = std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
            }
        }
        if (in_span) out.push_back(rho);
    }
    return out;
}

bool RootSystemA::is_a2_pair(const Root& beta, const Root& gamma) const {
    if (beta.is_zero() || gamma.is_zero()) return false;
    if (beta == gamma || beta == -gamma) return false;  // dependent
    if (cartan_integer(beta, gamma) != -1) return false;
    return span_roots(beta, gamma).size() == 6;
}

WeylElement RootSystemA::identity_element() const {
    WeylElement e;
    e.perm.resize(ell_ + 1);
    for (int k = 1; k <= ell_ + 1; ++k) e.perm[k - 1] = k;
    return e;
}

WeylElement RootSystemA::weyl_word(const Root& alpha, const Root& beta) const {
    if (alpha.is_zero() || beta.is_zero()) throw AlgebraError("weyl word: roots must be nonzero");
    if (!contains(alpha) || !contains(beta)) throw AlgebraError("weyl word: root outside system");

    WeylElement start = identity_element();
    if (start.apply(alpha) == beta) return start;

    // BFS over Sym(ell+1); states keyed by the permutation. Appending k to a
    // word composes with s_k applied first, so perm' = perm o s_k.
    std::map<std::vector<int>, std::pair<std::vector<int>, int>> parent;  // perm -> (prev perm, k)
    std::queue<std::vector<int>> frontier;
    parent.emplace(start.perm, std::make_pair(std::vector<int>{}, 0));
    frontier.push(start.perm);

    while (!frontier.empty()) {
        std::vector<int> cur = frontier.front();
        frontier.pop();
        for (int k = 1; k <= ell_; ++k) {
            std::vector<int> next = cur;
            std::swap(next[k - 1], next[k]);  // cur o s_k
            if (parent.count(next)) continue;
            parent.emplace(next, std::make_pair(cur, k));
            if (next[alpha.i() - 1] == beta.i() && next[alpha.j() - 1] == beta.j()) {
                WeylElement w;
                w.perm = next;
                std::vector<int> p = next;
                while (true) {
                    auto& [prev, gen] = parent.at(p);
                    if (gen == 0) break;
                    w.word.push_back(gen);
                    p = prev;
                }
                std::reverse(w.word.begin(), w.word.end());
                return w;
            }
            frontier.push(next);
        }
    }
    throw AlgebraError("weyl word: unreachable");  // Sym acts transitively on pairs
}

}  // namespace latorus
