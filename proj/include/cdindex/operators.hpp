#pragma once

/**
 * @file operators.hpp
 * @brief The E, C, D operators on integer functions over skeleta.
 *
 * For a poset of rank n, a function at level m is defined on the elements of
 * degree at most m (the bottom included). Applying a cd-word to the
 * constant function 1 at level n, rightmost letter first, with c acting as
 * C and d as D, leaves a function at level 0: its value at the bottom is
 * the coefficient of that word in the cd-index whenever the poset is
 * Gorenstein*.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "cdindex/barycentric.hpp"
#include "cdindex/cd_polynomial.hpp"
#include "cdindex/error.hpp"
#include "cdindex/numeric.hpp"
#include "cdindex/poset.hpp"

namespace cdindex {

class SkeletonFunction {
public:
    SkeletonFunction(GradedPoset P, int level) : poset_(std::move(P)), level_(level)
    {
        if (level < 0 || level > poset_.rank())
            throw OutOfRange("level " + std::to_string(level) + " outside [0, " + std::to_string(poset_.rank()) + "]");
        values_.assign(poset_.size(), 0);
    }

    static SkeletonFunction constant(GradedPoset P, int level, const Integer& v)
    {
        SkeletonFunction f(std::move(P), level);
        for (Element x = 0; x < f.poset_.size(); ++x)
            if (f.in_domain(x)) f.values_[x] = v;
        return f;
    }

    const GradedPoset& poset() const { return poset_; }
    int level() const { return level_; }

    bool in_domain(Element x) const { return x < poset_.size() && poset_.deg(x) <= level_; }

    const Integer& operator()(Element x) const
    {
        check(x);
        return values_[x];
    }

    void set(Element x, Integer v)
    {
        check(x);
        values_[x] = std::move(v);
    }

    std::vector<Element> domain() const
    {
        std::vector<Element> out;
        for (Element x = 0; x < poset_.size(); ++x)
            if (in_domain(x)) out.push_back(x);
        return out;
    }

    /// Same values, one level lower.
    SkeletonFunction restricted() const
    {
        if (level_ == 0) throw OutOfRange("cannot restrict a level-0 function");
        SkeletonFunction g(poset_, level_ - 1);
        for (Element x = 0; x < poset_.size(); ++x)
            if (g.in_domain(x)) g.values_[x] = values_[x];
        return g;
    }

    SkeletonFunction& operator+=(const SkeletonFunction& o)
    {
        same_shape(o);
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
        return *this;
    }
    SkeletonFunction& operator-=(const SkeletonFunction& o)
    {
        same_shape(o);
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
        return *this;
    }
    SkeletonFunction& operator*=(const Integer& s)
    {
        for (auto& v : values_) v *= s;
        return *this;
    }
    friend SkeletonFunction operator+(SkeletonFunction a, const SkeletonFunction& b) { return a += b; }
    friend SkeletonFunction operator-(SkeletonFunction a, const SkeletonFunction& b) { return a -= b; }
    friend SkeletonFunction operator*(const Integer& s, SkeletonFunction a) { return a *= s; }

    bool operator==(const SkeletonFunction& o) const { return level_ == o.level_ && values_ == o.values_; }

private:
    void check(Element x) const
    {
        if (!in_domain(x)) throw OutOfRange("element outside the level-" + std::to_string(level_) + " domain");
    }
    void same_shape(const SkeletonFunction& o) const
    {
        if (o.level_ != level_ || o.values_.size() != values_.size())
            throw OutOfRange("skeleton functions live on different domains");
    }

    GradedPoset poset_;
    int level_;
    std::vector<Integer> values_;
};

/// E(f)(s) = sum over t >= s with deg t <= m of (-1)^(m - deg t) f(t).
inline SkeletonFunction op_E(const SkeletonFunction& f)
{
    const GradedPoset& P = f.poset();
    const int m = f.level();
    SkeletonFunction out(P, m);
    for (Element s : f.domain()) {
        Integer acc = 0;
        P.for_each_above(s, [&](Element t) {
            if (P.deg(t) > m) return;
            if ((m - P.deg(t)) % 2 == 0)
                acc += f(t);
            else
                acc -= f(t);
        });
        out.set(s, std::move(acc));
    }
    return out;
}

/// Restriction to one level lower.
inline SkeletonFunction op_C(const SkeletonFunction& f) { return f.restricted(); }

/// D = C (E - Id) C.
inline SkeletonFunction op_D(const SkeletonFunction& f)
{
    if (f.level() < 2) throw OutOfRange("D needs level >= 2");
    const SkeletonFunction inner = op_C(f);
    return op_C(op_E(inner) - inner);
}

/**
 * Applies w(C, D) to f, rightmost letter first. Returns every intermediate
 * function, f itself first and the level-0 result last.
 */
inline std::vector<SkeletonFunction> apply_word_trace(const CdWord& w, const SkeletonFunction& f)
{
    if (w.degree() != f.level())
        throw OutOfRange("word " + w.str() + " has degree " + std::to_string(w.degree()) + ", function level is " +
                         std::to_string(f.level()));
    std::vector<SkeletonFunction> trace{f};
    const auto& letters = w.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        trace.push_back(*it == 'c' ? op_C(trace.back()) : op_D(trace.back()));
    return trace;
}

inline std::vector<SkeletonFunction> monomial_trace(const GradedPoset& P, const CdWord& w)
{
    if (w.degree() != P.rank())
        throw OutOfRange("word degree " + std::to_string(w.degree()) + " differs from rank " +
                         std::to_string(P.rank()));
    return apply_word_trace(w, SkeletonFunction::constant(P, P.rank(), 1));
}

/// w(C, D) applied to the constant 1, read off at the bottom.
inline Integer eval_cd_monomial(const GradedPoset& P, const CdWord& w)
{
    const auto trace = monomial_trace(P, w);
    return trace.back()(P.bottom());
}

inline CdPolynomial cd_index_operator(const GradedPoset& P)
{
    CdPolynomial out;
    for (const auto& w : enumerate_cd_words(P.rank())) out.add(w, eval_cd_monomial(P, w));
    return out;
}

/// The m-skeleton of a poset and the chain lattice of that skeleton.
struct PullbackFrame {
    ElementSubposet skeleton;
    BarycentricResult chains;
};

inline PullbackFrame make_pullback_frame(const GradedPoset& P, int m)
{
    auto skel = cdindex::skeleton(P, m);
    auto b = barycentric(skel.poset);
    return {std::move(skel), std::move(b)};
}

/// (pi^* f)(x) = f(pi(x)) on the chain lattice of the level-m skeleton.
inline SkeletonFunction pullback(const SkeletonFunction& f, const PullbackFrame& frame)
{
    if (frame.skeleton.poset.rank() != f.level()) throw OutOfRange("pullback frame level differs from function level");
    const auto& B = frame.chains.bposet;
    SkeletonFunction out(B, f.level());
    for (Element x = 0; x < B.size(); ++x) {
        if (!out.in_domain(x)) continue;
        const Element in_skel = frame.chains.projection[x];
        const Element in_parent = frame.skeleton.to_parent[in_skel];
        out.set(x, f(in_parent));
    }
    return out;
}

inline SkeletonFunction pullback(const SkeletonFunction& f)
{
    return pullback(f, make_pullback_frame(f.poset(), f.level()));
}

/// E(pi^* f) == pi^*(E f) pointwise.
inline bool check_E_commutes_with_pullback(const SkeletonFunction& f)
{
    const auto frame = make_pullback_frame(f.poset(), f.level());
    return op_E(pullback(f, frame)) == pullback(op_E(f), frame);
}

} // namespace cdindex
