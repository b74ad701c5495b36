#pragma once

#include <blf/bigint.hpp>
#include <blf/error.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

namespace blf {

// Isotopy class of an essential simple closed curve on T^2, i.e. a
// primitive class in H_1(T^2;Z). The Dehn twists about v and -v agree, so
// construction normalizes the sign of the stored representative to q > 0,
// or q = 0 and p > 0; non-primitive vectors (including (0,0)) are rejected.
class CurveClass {
public:
    CurveClass(Int p, Int q);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }

    friend bool operator==(const CurveClass& a, const CurveClass& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const CurveClass& a, const CurveClass& b) {
        return !(a == b);
    }
    friend bool operator<(const CurveClass& a, const CurveClass& b) {
        return std::tie(a.p_, a.q_) < std::tie(b.p_, b.q_);
    }

private:
    Int p_, q_;
};

std::ostream& operator<<(std::ostream& os, const CurveClass& v);

// Mapping class of T^2 as its action on H_1(T^2;Z): a 2x2 integer matrix
// [[a,b],[c,d]] of determinant one acting on column vectors. Construction
// of a determinant != 1 matrix throws DomainError.
class SL2Z {
public:
    SL2Z() : a_(1), b_(0), c_(0), d_(1) {}
    SL2Z(Int a, Int b, Int c, Int d);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    Int trace() const { return a_ + d_; }
    bool is_identity() const;
    bool is_minus_identity() const;

    SL2Z inverse() const { return SL2Z(d_, -b_, -c_, a_); }
    SL2Z negated() const { return SL2Z(-a_, -b_, -c_, -d_); }

    // Image of the column vector (x, y).
    std::pair<Int, Int> apply(const Int& x, const Int& y) const;

    friend SL2Z operator*(const SL2Z& lhs, const SL2Z& rhs);

    friend bool operator==(const SL2Z& x, const SL2Z& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const SL2Z& x, const SL2Z& y) { return !(x == y); }
    friend bool operator<(const SL2Z& x, const SL2Z& y) {
        return std::tie(x.a_, x.b_, x.c_, x.d_) <
               std::tie(y.a_, y.b_, y.c_, y.d_);
    }

private:
    Int a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const SL2Z& m);

// The Dehn twist T_v acting on H_1(T^2;Z), with the pinned convention
//
//   T_v(x) = x + (x ^ v) v,   x ^ v = x1 v2 - x2 v1,
//
// i.e. [[1+pq, -p^2],[q^2, 1-pq]] for v = (p,q). Trace 2, fixes v, and is
// even in v. This formula is the fixed dictionary every twist-power
// exponent in the toolkit refers to; assembly-direction choices live in
// Handedness below and never touch it.
SL2Z twist_matrix(const CurveClass& v);

// g m g^{-1}.
SL2Z conjugate(const SL2Z& g, const SL2Z& m);

// Image curve class g.v, renormalized to canonical sign. Satisfies
// conjugate(g, twist_matrix(v)) == twist_matrix(transform(g, v)).
CurveClass transform(const SL2Z& g, const CurveClass& v);

// Writes m = twist_matrix(axis)^exponent when m is parabolic of trace +2.
// The identity gets the distinguished exponent-0 answer with no axis;
// everything else is not a twist power. Total: never throws on any SL2Z.
struct TwistPowerDecomposition {
    enum class Status { twist_power, identity, not_a_twist_power };

    Status status = Status::not_a_twist_power;
    std::optional<CurveClass> axis;  // engaged iff status == twist_power
    Int exponent = 0;                // nonzero iff status == twist_power
};

TwistPowerDecomposition extract_twist_power(const SL2Z& m);

// Conjugacy-type classification of a mapping class, at the granularity the
// completion decision needs. Exactly one branch applies to every element:
//
//   identity            m == I
//   minus_identity      m == -I
//   twist_power         trace 2,  m != I   (m = T_axis^exponent)
//   negative_parabolic  trace -2, m != -I  (-m = T_axis^exponent)
//   elliptic            |trace| <= 1       (finite order 3, 4 or 6)
//   hyperbolic          |trace| >= 3
struct MonodromyClass {
    enum class Kind {
        identity,
        twist_power,
        negative_parabolic,
        minus_identity,
        elliptic,
        hyperbolic,
    };

    Kind kind = Kind::identity;
    std::optional<CurveClass> axis;  // twist_power / negative_parabolic
    Int exponent = 0;                // twist_power / negative_parabolic
    int elliptic_order = 0;          // 3, 4 or 6 when elliptic
    Int trace = 2;

    bool is_twist_power() const { return kind == Kind::twist_power; }
    bool completable() const {
        return kind == Kind::identity || kind == Kind::twist_power;
    }
};

const char* to_string(MonodromyClass::Kind kind);

MonodromyClass classify(const SL2Z& m);

// Global convention pair for assembling monodromy matrices out of ordered
// singular-fiber data. The source material fixes neither the handedness of
// the local twists nor the direction the boundary loop is traversed; the
// two mutually consistent global choices differ by inverting every
// assembled monodromy. The twist dictionary above stays fixed either way.
//
//   right  every singular fiber contributes a right-handed twist and later
//          fibers compose on the left: total = T_{c_mu} * ... * T_{c_1}.
//   left   the mirror convention: left-handed twists in reading order,
//          i.e. the inverse of the right-handed total.
enum class Handedness { right, left };

const char* to_string(Handedness h);

}  // namespace blf
