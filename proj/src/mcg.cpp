#include <blf/mcg.hpp>

#include <ostream>
#include <sstream>

namespace blf {

CurveClass::CurveClass(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_ == 0 && q_ == 0)
        throw DomainError("curve class (0,0) is not primitive");
    if (gcd(abs(p_), abs(q_)) != 1) {
        std::ostringstream os;
        os << "curve class (" << p_ << "," << q_ << ") is not primitive";
        throw DomainError(os.str());
    }
    if (q_ < 0 || (q_ == 0 && p_ < 0)) {
        p_ = -p_;
        q_ = -q_;
    }
}

std::ostream& operator<<(std::ostream& os, const CurveClass& v) {
    return os << "(" << v.p() << "," << v.q() << ")";
}

SL2Z::SL2Z(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != 1) {
        std::ostringstream os;
        os << "matrix [[" << a_ << "," << b_ << "],[" << c_ << "," << d_
           << "]] has determinant != 1";
        throw DomainError(os.str());
    }
}

bool SL2Z::is_identity() const {
    return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1;
}

bool SL2Z::is_minus_identity() const {
    return a_ == -1 && b_ == 0 && c_ == 0 && d_ == -1;
}

std::pair<Int, Int> SL2Z::apply(const Int& x, const Int& y) const {
    return {a_ * x + b_ * y, c_ * x + d_ * y};
}

SL2Z operator*(const SL2Z& lhs, const SL2Z& rhs) {
    return SL2Z(lhs.a_ * rhs.a_ + lhs.b_ * rhs.c_,
                lhs.a_ * rhs.b_ + lhs.b_ * rhs.d_,
                lhs.c_ * rhs.a_ + lhs.d_ * rhs.c_,
                lhs.c_ * rhs.b_ + lhs.d_ * rhs.d_);
}

std::ostream& operator<<(std::ostream& os, const SL2Z& m) {
    return os << "[[" << m.a() << "," << m.b() << "],[" << m.c() << ","
              << m.d() << "]]";
}

SL2Z twist_matrix(const CurveClass& v) {
    const Int& p = v.p();
    const Int& q = v.q();
    return SL2Z(1 + p * q, -p * p, q * q, 1 - p * q);
}

SL2Z conjugate(const SL2Z& g, const SL2Z& m) { return g * m * g.inverse(); }

CurveClass transform(const SL2Z& g, const CurveClass& v) {
    auto [p, q] = g.apply(v.p(), v.q());
    return CurveClass(std::move(p), std::move(q));
}

TwistPowerDecomposition extract_twist_power(const SL2Z& m) {
    TwistPowerDecomposition out;
    if (m.is_identity()) {
        out.status = TwistPowerDecomposition::Status::identity;
        return out;
    }
    if (m.trace() != 2) return out;

    // m - I is nonzero, traceless and square-zero (det(m - I) = 2 - tr m
    // = 0), hence equals n * S_v for a unique primitive axis v up to sign
    // and a unique nonzero integer n, where S_v = [[pq,-p^2],[q^2,-pq]].
    const Int al = m.a() - 1;
    const Int be = m.b();
    const Int ga = m.c();

    Int vp, vq;
    if (al != 0 || be != 0) {
        vp = be;
        vq = -al;
    } else {
        vp = 0;
        vq = 1;
    }
    const Int g = gcd(abs(vp), abs(vq));
    CurveClass axis(vp / g, vq / g);

    const Int n = axis.q() != 0 ? ga / (axis.q() * axis.q())
                                : -be / (axis.p() * axis.p());

    const Int p = axis.p();
    const Int q = axis.q();
    if (m.a() - 1 != n * p * q || m.b() != -n * p * p ||
        m.c() != n * q * q || m.d() - 1 != -n * p * q)
        throw InvariantViolation("trace-2 matrix failed twist-power shape");

    out.status = TwistPowerDecomposition::Status::twist_power;
    out.axis = axis;
    out.exponent = n;
    return out;
}

const char* to_string(MonodromyClass::Kind kind) {
    switch (kind) {
        case MonodromyClass::Kind::identity: return "Identity";
        case MonodromyClass::Kind::twist_power: return "TwistPower";
        case MonodromyClass::Kind::negative_parabolic:
            return "NegativeParabolic";
        case MonodromyClass::Kind::minus_identity: return "MinusIdentity";
        case MonodromyClass::Kind::elliptic: return "Elliptic";
        case MonodromyClass::Kind::hyperbolic: return "Hyperbolic";
    }
    return "?";
}

MonodromyClass classify(const SL2Z& m) {
    MonodromyClass out;
    out.trace = m.trace();

    if (m.is_identity()) {
        out.kind = MonodromyClass::Kind::identity;
        return out;
    }
    if (m.is_minus_identity()) {
        out.kind = MonodromyClass::Kind::minus_identity;
        return out;
    }
    if (out.trace == 2) {
        auto tp = extract_twist_power(m);
        out.kind = MonodromyClass::Kind::twist_power;
        out.axis = tp.axis;
        out.exponent = tp.exponent;
        return out;
    }
    if (out.trace == -2) {
        auto tp = extract_twist_power(m.negated());
        out.kind = MonodromyClass::Kind::negative_parabolic;
        out.axis = tp.axis;
        out.exponent = tp.exponent;
        return out;
    }
    if (abs(out.trace) <= 1) {
        out.kind = MonodromyClass::Kind::elliptic;
        // Char. polynomial x^2 - t x + 1: t = 0 gives m^2 = -I, t = 1
        // gives m^6 = I, t = -1 gives m^3 = I.
        out.elliptic_order = out.trace == 0 ? 4 : (out.trace == 1 ? 6 : 3);
        return out;
    }
    out.kind = MonodromyClass::Kind::hyperbolic;
    return out;
}

const char* to_string(Handedness h) {
    return h == Handedness::right ? "right" : "left";
}

}  // namespace blf
