// The group (GL(m,R) x GL(n,R)^op) x| Aut(R) acting by (U,V,phi,A) |->
// U.phi(A).V, truncated at an explicit degree cap.
//
// Composition is fixed right-to-left: applying g1 then g2 equals applying
// the single element with U = U2.phi2(U1), V = phi2(V1).V2 and
// phi = phi2 after phi1 (the opposite-group structure on the V side only
// affects this composition order).
#pragma once

#include "findet/poly_matrix.hpp"
#include "findet/rng.hpp"

namespace findet {

// A local coordinate change: images of the variables, all in m, with
// invertible linear part (which certifies membership in Aut(R)).
class LocalAutomorphism {
public:
    explicit LocalAutomorphism(std::vector<Poly> images);

    static LocalAutomorphism identity(const Field& f, std::size_t nvars);

    const std::vector<Poly>& images() const { return images_; }
    std::size_t nvars() const { return images_.size(); }
    const Field& field() const { return images_.at(0).field(); }
    std::uint32_t degree() const;  // max degree over the images

    // Linear-part coefficient matrix (row i = linear coefficients of phi_i).
    std::vector<std::vector<FieldElem>> jacobian0() const;

private:
    std::vector<Poly> images_;
};

struct GroupElement {
    PolyMatrix u;  // GL(m, R)
    PolyMatrix v;  // GL(n, R)^op
    LocalAutomorphism phi;

    GroupElement(PolyMatrix u_, PolyMatrix v_, LocalAutomorphism phi_);
};

// U . phi(A) . V with all substitutions and products truncated at the cap.
PolyMatrix apply(const GroupElement& g, const PolyMatrix& a, std::uint32_t degree_cap);

// U, V = identity + random m-entries; phi = random invertible linear part
// plus higher-order terms up to the degree cap. Deterministic in the seed.
GroupElement random_group_element(std::size_t m, std::size_t n, std::size_t s, const Field& f,
                                  std::uint64_t seed, std::uint32_t degree_cap);

// Determinant of a scalar matrix over the field (used for the jacobian0
// invertibility certificate).
FieldElem scalar_det(const std::vector<std::vector<FieldElem>>& m, const Field& f);

}  // namespace findet
