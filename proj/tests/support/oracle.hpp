#pragma once

// Test-only reference implementations, written independently of the
// library's solver and bracket code paths.

#include "pgca/derivation.hpp"
#include "pgca/element.hpp"
#include "pgca/scalar.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace pgca::oracle {

/// Structure constants read straight off the two printed tables, as a
/// lookup on (family of a, family of b) with explicit reversal.
inline Element generator_bracket(const Generator &a, const Generator &b)
{
    const std::int64_t n = a.degree, m = b.degree;
    const Basis basis = a.basis;
    auto g = [&](Family f) { return Generator{basis, f, m + n}; };
    const bool bold = basis == Basis::Bold;
    using F = Family;
    Element out(basis);
    if (a.family == F::L) {
        switch (b.family) {
        case F::L: out.add_term(GaussianRational(m - n), g(F::L)); break;
        case F::H: out.add_term(GaussianRational(m), g(F::H)); break;
        case F::I: out.add_term(GaussianRational(m - n), g(F::I)); break;
        case F::J: out.add_term(GaussianRational(m - n), g(F::J)); break;
        }
        return out;
    }
    if (b.family == F::L)
        return -generator_bracket(b, a);
    if (a.family == F::H && b.family == F::I)
        out.add_term(1, g(bold ? F::J : F::I));
    else if (a.family == F::H && b.family == F::J)
        out.add_term(-1, g(bold ? F::I : F::J));
    else if (b.family == F::H && (a.family == F::I || a.family == F::J))
        return -generator_bracket(b, a);
    return out;
}

inline Element bracket(const Element &x, const Element &y)
{
    Element out(x.is_zero() ? y.basis() : x.basis());
    for (const auto &[a, ca] : x.terms())
        for (const auto &[b, cb] : y.terms())
            out += (ca * cb) * generator_bracket(a, b);
    return out;
}

/// ad(inner) + lambda D evaluated with the reference bracket.
inline Element apply(const Derivation &d, const Element &y)
{
    Element out = oracle::bracket(d.inner, y);
    for (const auto &[g, c] : y.terms())
        if (g.family == Family::I || g.family == Family::J)
            out.add_term(d.outer * c, g);
    return out;
}

/// Dense row-reduction rank over Q(i); no pivot-order tricks, no sparsity.
inline std::size_t rank(std::vector<std::vector<GaussianRational>> m)
{
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c].is_zero())
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (k == r || m[k][c].is_zero())
                continue;
            GaussianRational f = m[k][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                m[k][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

/// Dense coordinate matrix of some elements over the union of their supports.
inline std::vector<std::vector<GaussianRational>> dense(const std::vector<Element> &xs)
{
    std::map<Generator, std::size_t> col;
    for (const auto &x : xs)
        for (const auto &[g, c] : x.terms())
            col.emplace(g, 0);
    std::size_t k = 0;
    for (auto &[g, i] : col)
        i = k++;
    std::vector<std::vector<GaussianRational>> m(xs.size(), std::vector<GaussianRational>(col.size()));
    for (std::size_t r = 0; r < xs.size(); ++r)
        for (const auto &[g, c] : xs[r].terms())
            m[r][col[g]] = c;
    return m;
}

inline std::size_t rank(const std::vector<Element> &xs) { return rank(dense(xs)); }

/// Dense matrix from vectors given as key -> coefficient maps.
template <class Key>
std::vector<std::vector<GaussianRational>> dense(const std::vector<std::map<Key, GaussianRational>> &vs)
{
    std::map<Key, std::size_t> col;
    for (const auto &v : vs)
        for (const auto &[k, c] : v)
            col.emplace(k, 0);
    std::size_t n = 0;
    for (auto &[k, i] : col)
        i = n++;
    std::vector<std::vector<GaussianRational>> m(vs.size(), std::vector<GaussianRational>(col.size()));
    for (std::size_t r = 0; r < vs.size(); ++r)
        for (const auto &[k, c] : vs[r])
            m[r][col[k]] = c;
    return m;
}

} // namespace pgca::oracle
