#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semigor/errors.hpp"

namespace semigor {

using Coord = std::int64_t;

// Monomial exponent vector in Z^d. All arithmetic is overflow-checked; a
// wrapped classification would be worse than no classification.
using Vec = std::vector<Coord>;

Coord checked_add(Coord a, Coord b);
Coord checked_sub(Coord a, Coord b);
Coord checked_mul(Coord a, Coord b);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(Coord c, const Vec& a);
bool is_zero(const Vec& a);

std::string vec_to_string(const Vec& a);

// v / gcd(coords); direction preserved, zero vector rejected.
Vec primitive(const Vec& v);

// Positive integer linear functional; degree(v) = (weights . v) / divisor.
// divisor > 1 only appears on Veronese subrings, where weights stay those of
// the ambient ring and every lattice member of the subring has divisible
// weight sum. degree() rejects non-divisible inputs.
struct Grading {
    Vec weights;
    Coord divisor = 1;

    Coord degree(const Vec& v) const;
    // Raw weighted sum, no divisor applied.
    Coord raw(const Vec& v) const;
};

// Sorts by (degree, lexicographic); every emitted generator list uses this.
bool deg_lex_less(const Grading& grading, const Vec& a, const Vec& b);
void sort_deg_lex(const Grading& grading, std::vector<Vec>& vectors);

enum class ConeRegion { Outside, Boundary, Interior };
enum class BoundaryRay { None, Low, High, Both };

struct ConePosition {
    ConeRegion region;
    BoundaryRay ray = BoundaryRay::None;

    bool inside() const { return region != ConeRegion::Outside; }
};

// Pointed rational cone in Z^2 spanned by two primitive, linearly independent
// rays, stored so that det(ray_low, ray_high) > 0. Membership is decided by
// the two inward normal functionals.
class Cone2D {
  public:
    static Cone2D from_rays(const Vec& a, const Vec& b);

    const Vec& ray_low() const { return ray_low_; }
    const Vec& ray_high() const { return ray_high_; }

    // det(ray_low, ray_high) > 0; equals the lattice index of the
    // fundamental parallelepiped.
    Coord det() const { return det_; }

    Coord normal_low(const Vec& v) const;
    Coord normal_high(const Vec& v) const;

    ConePosition position(const Vec& v) const;
    bool contains(const Vec& v) const { return position(v).inside(); }

    // All lattice points of {a*ray_low + b*ray_high : 0 <= a, b < 1};
    // cardinality det(). Sorted lexicographically.
    std::vector<Vec> parallelepiped_points() const;

  private:
    Vec ray_low_, ray_high_;
    Vec normal_low_, normal_high_;
    Coord det_ = 0;
};

// Unique minimal generating set of cone /\ Z^2, sorted lexicographically.
// Candidates are the rays plus the parallelepiped points; irreducibility is
// decided by exact cone sign tests, so no search cap is involved.
std::vector<Vec> hilbert_basis_2d(const Cone2D& cone);

// Column-style Hermite basis of the subgroup of Z^d generated by a vector
// family. Lower triangular with positive diagonal; absent when the family
// does not have full rank.
class LatticeBasis {
  public:
    static std::optional<LatticeBasis> from_generators(int dim, const std::vector<Vec>& gens);
    static LatticeBasis identity(int dim);

    int dim() const { return dim_; }
    bool is_identity() const { return index_ == 1 && identity_; }
    // [Z^d : L], the product of the diagonal.
    Coord index() const { return index_; }

    // Solves M*u = v; empty when v is outside the lattice.
    std::optional<Vec> to_internal(const Vec& v) const;
    Vec to_ambient(const Vec& u) const;

    const std::vector<Vec>& columns() const { return cols_; }

  private:
    int dim_ = 0;
    bool identity_ = true;
    Coord index_ = 1;
    std::vector<Vec> cols_;  // cols_[j][i] = M[i][j]
};

}  // namespace semigor
