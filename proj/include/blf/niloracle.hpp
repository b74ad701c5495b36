#pragma once

#include <blf/mcg.hpp>

#include <array>

namespace blf {

// Element of the integer lattice group acting on R^3 for a fixed shear
// parameter n: the affine map
//
//   (x, y, z) |-> (x + s, y + t, z + u - n s y),
//
// the group generated by
//
//   alpha1 = (0,1,0)   (x,y,z) -> (x, y+1, z)
//   alpha2 = (0,0,1)   (x,y,z) -> (x, y, z+1)
//   alpha3 = (1,0,0)   (x,y,z) -> (x+1, y, z - n y).
//
// Composition stays in this parameter shape, which is checked against
// pointwise application in the tests. The quotient of R^3 by this group is
// simultaneously a circle bundle over T^2 (drop z) and a torus bundle over
// the circle (keep x); both readings below are computed directly from the
// group structure, independent of all twist-matrix machinery.
class LatticeElement {
public:
    LatticeElement(Int shear, Int s, Int t, Int u);

    static LatticeElement alpha1(const Int& shear);
    static LatticeElement alpha2(const Int& shear);
    static LatticeElement alpha3(const Int& shear);

    const Int& shear() const { return shear_; }
    const Int& s() const { return s_; }
    const Int& t() const { return t_; }
    const Int& u() const { return u_; }

    // Apply *this first, then g. Throws DomainError on mismatched shear.
    LatticeElement then(const LatticeElement& g) const;

    LatticeElement inverse() const;

    std::array<Int, 3> apply(const Int& x, const Int& y, const Int& z) const;

    friend bool operator==(const LatticeElement& a, const LatticeElement& b) {
        return a.shear_ == b.shear_ && a.s_ == b.s_ && a.t_ == b.t_ &&
               a.u_ == b.u_;
    }

private:
    Int shear_, s_, t_, u_;
};

// Monodromy of the torus bundle over the circle: the action of conjugation
// by the loop generator alpha3 on the fiber lattice <alpha1, alpha2>,
// expressed in the (alpha1, alpha2) basis. Handedness::left traverses the
// base circle the other way (conjugation by alpha3^{-1}). For n != 0 this
// classifies as a twist power about the alpha2-axis class with |exponent|
// = |n|; the sign it realizes is the toolkit's global sign sigma.
SL2Z nil_monodromy(const Int& n, Handedness h = Handedness::right);

// Euler class of the circle bundle over T^2: the commutator of alpha3 and
// alpha1 (applied in that order) is a pure power of the fiber translation
// alpha2, and that power is returned. Equals n for every n; a commutator
// that is not a pure alpha2 power throws InvariantViolation.
Int euler_class(const Int& n);

}  // namespace blf
