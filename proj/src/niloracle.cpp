#include <blf/niloracle.hpp>

namespace blf {

LatticeElement::LatticeElement(Int shear, Int s, Int t, Int u)
    : shear_(std::move(shear)),
      s_(std::move(s)),
      t_(std::move(t)),
      u_(std::move(u)) {}

LatticeElement LatticeElement::alpha1(const Int& shear) {
    return {shear, 0, 1, 0};
}

LatticeElement LatticeElement::alpha2(const Int& shear) {
    return {shear, 0, 0, 1};
}

LatticeElement LatticeElement::alpha3(const Int& shear) {
    return {shear, 1, 0, 0};
}

LatticeElement LatticeElement::then(const LatticeElement& g) const {
    if (shear_ != g.shear_)
        throw DomainError("composing lattice elements of different shear");
    // g(this(x,y,z)): the only cross term is g's shear acting on the y
    // translation already performed by *this.
    return {shear_, s_ + g.s_, t_ + g.t_, u_ + g.u_ - shear_ * g.s_ * t_};
}

LatticeElement LatticeElement::inverse() const {
    return {shear_, -s_, -t_, -u_ - shear_ * s_ * t_};
}

std::array<Int, 3> LatticeElement::apply(const Int& x, const Int& y,
                                         const Int& z) const {
    return {x + s_, y + t_, z + u_ - shear_ * s_ * y};
}

SL2Z nil_monodromy(const Int& n, Handedness h) {
    const LatticeElement a1 = LatticeElement::alpha1(n);
    const LatticeElement a2 = LatticeElement::alpha2(n);
    LatticeElement loop = LatticeElement::alpha3(n);
    if (h == Handedness::left) loop = loop.inverse();

    auto around = [&](const LatticeElement& g) {
        return loop.inverse().then(g).then(loop);
    };
    const LatticeElement i1 = around(a1);
    const LatticeElement i2 = around(a2);
    if (i1.s() != 0 || i2.s() != 0)
        throw InvariantViolation("fiber lattice not preserved by monodromy");

    // Columns are the images of alpha1, alpha2 in the (alpha1, alpha2)
    // basis; translations in y and z commute, so (t, u) is the coordinate
    // vector.
    return SL2Z(i1.t(), i2.t(), i1.u(), i2.u());
}

Int euler_class(const Int& n) {
    const LatticeElement a1 = LatticeElement::alpha1(n);
    const LatticeElement a3 = LatticeElement::alpha3(n);
    const LatticeElement c =
        a3.then(a1).then(a3.inverse()).then(a1.inverse());
    if (c.s() != 0 || c.t() != 0)
        throw InvariantViolation("commutator is not a pure alpha2 power");
    return c.u();
}

}  // namespace blf
