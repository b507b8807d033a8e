#include "semigor/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace semigor {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::EmptyGenerators: return "EmptyGenerators";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::NonPositiveDegree: return "NonPositiveDegree";
        case ErrorKind::GroupNotFull: return "GroupNotFull";
        case ErrorKind::GcdNotOne: return "GcdNotOne";
        case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
        case ErrorKind::RadicalCapExceeded: return "RadicalCapExceeded";
        case ErrorKind::WindowUnstable: return "WindowUnstable";
        case ErrorKind::StabilizationFailed: return "StabilizationFailed";
        case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
        case ErrorKind::UnsupportedRing: return "UnsupportedRing";
        case ErrorKind::NotSemiStandard: return "NotSemiStandard";
        case ErrorKind::RetryExhausted: return "RetryExhausted";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool is_resource_error(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DegreeCapExceeded:
        case ErrorKind::RadicalCapExceeded:
        case ErrorKind::WindowUnstable:
        case ErrorKind::StabilizationFailed:
        case ErrorKind::RetryExhausted:
            return true;
        default:
            return false;
    }
}

Coord checked_add(Coord a, Coord b) {
    Coord r;
    if (__builtin_add_overflow(a, b, &r)) raise(ErrorKind::Overflow, "integer addition");
    return r;
}

Coord checked_sub(Coord a, Coord b) {
    Coord r;
    if (__builtin_sub_overflow(a, b, &r)) raise(ErrorKind::Overflow, "integer subtraction");
    return r;
}

Coord checked_mul(Coord a, Coord b) {
    Coord r;
    if (__builtin_mul_overflow(a, b, &r)) raise(ErrorKind::Overflow, "integer multiplication");
    return r;
}

static void require_same_dim(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        raise(ErrorKind::DimensionMismatch,
              "vector dimensions " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

Vec vec_add(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(0, a[i]);
    return r;
}

Vec vec_scale(Coord c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(c, a[i]);
    return r;
}

bool is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](Coord c) { return c == 0; });
}

std::string vec_to_string(const Vec& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << a[i];
    }
    os << ')';
    return os.str();
}

Vec primitive(const Vec& v) {
    if (is_zero(v)) raise(ErrorKind::ZeroVector, "primitive of the zero vector");
    Coord g = 0;
    for (Coord c : v) g = std::gcd(g, c);
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

Coord Grading::raw(const Vec& v) const {
    if (v.size() != weights.size()) raise(ErrorKind::DimensionMismatch, "grading evaluation");
    Coord s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s = checked_add(s, checked_mul(weights[i], v[i]));
    return s;
}

Coord Grading::degree(const Vec& v) const {
    Coord s = raw(v);
    if (divisor == 1) return s;
    if (s % divisor != 0)
        raise(ErrorKind::InvalidArgument,
              "degree of " + vec_to_string(v) + " is not divisible by " + std::to_string(divisor));
    return s / divisor;
}

bool deg_lex_less(const Grading& grading, const Vec& a, const Vec& b) {
    Coord da = grading.degree(a), db = grading.degree(b);
    if (da != db) return da < db;
    return a < b;
}

void sort_deg_lex(const Grading& grading, std::vector<Vec>& vectors) {
    std::sort(vectors.begin(), vectors.end(),
              [&](const Vec& a, const Vec& b) { return deg_lex_less(grading, a, b); });
}

static Coord cross(const Vec& a, const Vec& b) {
    return checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]));
}

Cone2D Cone2D::from_rays(const Vec& a, const Vec& b) {
    if (a.size() != 2 || b.size() != 2) raise(ErrorKind::DimensionMismatch, "cone rays must be 2d");
    if (is_zero(a) || is_zero(b)) raise(ErrorKind::ZeroVector, "cone ray");
    Vec low = primitive(a), high = primitive(b);
    Coord d = cross(low, high);
    if (d == 0) raise(ErrorKind::InvalidArgument, "cone rays are linearly dependent");
    if (d < 0) {
        std::swap(low, high);
        d = -d;
    }
    Cone2D c;
    c.ray_low_ = low;
    c.ray_high_ = high;
    c.det_ = d;
    c.normal_low_ = {checked_sub(0, low[1]), low[0]};   // vanishes on ray_low, positive on ray_high
    c.normal_high_ = {high[1], checked_sub(0, high[0])};  // vanishes on ray_high, positive on ray_low
    return c;
}

Coord Cone2D::normal_low(const Vec& v) const {
    if (v.size() != 2) raise(ErrorKind::DimensionMismatch, "cone query must be 2d");
    return checked_add(checked_mul(normal_low_[0], v[0]), checked_mul(normal_low_[1], v[1]));
}

Coord Cone2D::normal_high(const Vec& v) const {
    if (v.size() != 2) raise(ErrorKind::DimensionMismatch, "cone query must be 2d");
    return checked_add(checked_mul(normal_high_[0], v[0]), checked_mul(normal_high_[1], v[1]));
}

ConePosition Cone2D::position(const Vec& v) const {
    Coord nl = normal_low(v), nh = normal_high(v);
    if (nl < 0 || nh < 0) return {ConeRegion::Outside, BoundaryRay::None};
    if (nl > 0 && nh > 0) return {ConeRegion::Interior, BoundaryRay::None};
    if (nl == 0 && nh == 0) return {ConeRegion::Boundary, BoundaryRay::Both};
    return {ConeRegion::Boundary, nl == 0 ? BoundaryRay::Low : BoundaryRay::High};
}

std::vector<Vec> Cone2D::parallelepiped_points() const {
    // v = a*ray_low + b*ray_high with a = cross(v, ray_high)/det and
    // b = cross(ray_low, v)/det; the half-open box is 0 <= a, b < 1.
    Coord xs[4] = {0, ray_low_[0], ray_high_[0], checked_add(ray_low_[0], ray_high_[0])};
    Coord ys[4] = {0, ray_low_[1], ray_high_[1], checked_add(ray_low_[1], ray_high_[1])};
    Coord xmin = *std::min_element(xs, xs + 4), xmax = *std::max_element(xs, xs + 4);
    Coord ymin = *std::min_element(ys, ys + 4), ymax = *std::max_element(ys, ys + 4);
    std::vector<Vec> points;
    for (Coord x = xmin; x <= xmax; ++x) {
        for (Coord y = ymin; y <= ymax; ++y) {
            Vec v{x, y};
            Coord a_num = cross(v, ray_high_);
            Coord b_num = cross(ray_low_, v);
            if (a_num >= 0 && a_num < det_ && b_num >= 0 && b_num < det_) points.push_back(v);
        }
    }
    std::sort(points.begin(), points.end());
    if (static_cast<Coord>(points.size()) != det_)
        raise(ErrorKind::InvalidArgument, "parallelepiped point count disagrees with determinant");
    return points;
}

std::vector<Vec> hilbert_basis_2d(const Cone2D& cone) {
    std::vector<Vec> candidates = cone.parallelepiped_points();
    candidates.erase(std::remove_if(candidates.begin(), candidates.end(), is_zero), candidates.end());
    candidates.push_back(cone.ray_low());
    candidates.push_back(cone.ray_high());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // p is reducible iff p - c lands back in the cone (nonzero) for some
    // candidate c: any decomposition p = u + w can be rewritten through a
    // candidate since the candidates generate cone /\ Z^2.
    std::vector<Vec> basis;
    for (const Vec& p : candidates) {
        bool reducible = false;
        for (const Vec& c : candidates) {
            Vec rest = vec_sub(p, c);
            if (is_zero(rest)) continue;
            if (cone.contains(rest)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(p);
    }
    return basis;
}

LatticeBasis LatticeBasis::identity(int dim) {
    LatticeBasis b;
    b.dim_ = dim;
    b.identity_ = true;
    b.index_ = 1;
    b.cols_.assign(dim, Vec(dim, 0));
    for (int i = 0; i < dim; ++i) b.cols_[i][i] = 1;
    return b;
}

std::optional<LatticeBasis> LatticeBasis::from_generators(int dim, const std::vector<Vec>& gens) {
    // Column HNF by Euclidean column operations: work[j] are columns.
    std::vector<Vec> work;
    for (const Vec& g : gens) {
        if (static_cast<int>(g.size()) != dim) raise(ErrorKind::DimensionMismatch, "lattice basis input");
        work.push_back(g);
    }
    std::size_t pivot_col = 0;
    for (int row = 0; row < dim; ++row) {
        // Sweep gcd of this row into one column.
        std::size_t nonzero = pivot_col;
        while (true) {
            nonzero = pivot_col;
            while (nonzero < work.size() && work[nonzero][row] == 0) ++nonzero;
            if (nonzero >= work.size()) break;
            std::swap(work[pivot_col], work[nonzero]);
            bool done = true;
            for (std::size_t j = pivot_col + 1; j < work.size(); ++j) {
                while (work[j][row] != 0) {
                    Coord q = work[pivot_col][row] / work[j][row];
                    for (int i = 0; i < dim; ++i)
                        work[pivot_col][i] =
                            checked_sub(work[pivot_col][i], checked_mul(q, work[j][i]));
                    std::swap(work[pivot_col], work[j]);
                    done = false;
                }
            }
            if (done) break;
        }
        if (pivot_col >= work.size() || work[pivot_col][row] == 0) return std::nullopt;
        if (work[pivot_col][row] < 0) work[pivot_col] = vec_neg(work[pivot_col]);
        ++pivot_col;
        if (pivot_col > static_cast<std::size_t>(dim)) break;
    }

    LatticeBasis basis;
    basis.dim_ = dim;
    basis.cols_.assign(work.begin(), work.begin() + dim);
    // Reduce columns left of each pivot to keep entries small.
    for (int j = dim - 1; j >= 0; --j) {
        Coord piv = basis.cols_[j][j];
        for (int j2 = 0; j2 < j; ++j2) {
            Coord q = basis.cols_[j2][j] >= 0 ? basis.cols_[j2][j] / piv
                                              : -((-basis.cols_[j2][j] + piv - 1) / piv);
            if (q == 0) continue;
            for (int i = 0; i < dim; ++i)
                basis.cols_[j2][i] = checked_sub(basis.cols_[j2][i], checked_mul(q, basis.cols_[j][i]));
        }
    }
    basis.index_ = 1;
    basis.identity_ = true;
    for (int i = 0; i < dim; ++i) {
        basis.index_ = checked_mul(basis.index_, basis.cols_[i][i]);
        for (int r = 0; r < dim; ++r)
            if (basis.cols_[i][r] != (r == i ? 1 : 0)) basis.identity_ = false;
    }
    return basis;
}

std::optional<Vec> LatticeBasis::to_internal(const Vec& v) const {
    if (static_cast<int>(v.size()) != dim_) raise(ErrorKind::DimensionMismatch, "lattice solve");
    if (is_identity()) return v;
    // Lower triangular forward substitution with divisibility checks.
    Vec u(dim_, 0);
    Vec rhs = v;
    for (int i = 0; i < dim_; ++i) {
        Coord acc = rhs[i];
        for (int j = 0; j < i; ++j) acc = checked_sub(acc, checked_mul(cols_[j][i], u[j]));
        Coord piv = cols_[i][i];
        if (acc % piv != 0) return std::nullopt;
        u[i] = acc / piv;
    }
    return u;
}

Vec LatticeBasis::to_ambient(const Vec& u) const {
    if (static_cast<int>(u.size()) != dim_) raise(ErrorKind::DimensionMismatch, "lattice map");
    if (is_identity()) return u;
    Vec v(dim_, 0);
    for (int j = 0; j < dim_; ++j)
        for (int i = 0; i < dim_; ++i) v[i] = checked_add(v[i], checked_mul(cols_[j][i], u[j]));
    return v;
}

}  // namespace semigor
