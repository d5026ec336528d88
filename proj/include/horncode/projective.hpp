#ifndef HORNCODE_PROJECTIVE_HPP
#define HORNCODE_PROJECTIVE_HPP

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "linalg.hpp"
#include "partition.hpp"

namespace horncode {

/// Point of PG(n, q): homogeneous coordinates normalized so the first
/// nonzero coordinate is 1, making representatives canonical.
class ProjectivePoint {
   public:
    ProjectivePoint(const FieldSpec& f, std::vector<int> coords) : spec_(&f), h_(std::move(coords)) {
        if (h_.empty()) throw std::invalid_argument("point needs at least one coordinate");
        int lead = -1;
        for (size_t i = 0; i < h_.size(); ++i) {
            if (h_[i] < 0 || h_[i] >= f.order()) throw std::invalid_argument("coordinate out of field range");
            if (h_[i] != 0 && lead < 0) lead = static_cast<int>(i);
        }
        if (lead < 0) throw std::invalid_argument("projective point cannot be zero");
        if (h_[lead] != 1) {
            int s = f.inv(h_[lead]);
            for (int& c : h_) c = f.mul(c, s);
        }
    }

    const FieldSpec& field() const { return *spec_; }
    const std::vector<int>& coords() const { return h_; }
    int dim() const { return static_cast<int>(h_.size()) - 1; }  // ambient projective dimension

    bool operator==(const ProjectivePoint& o) const { return spec_ == o.spec_ && h_ == o.h_; }
    bool operator<(const ProjectivePoint& o) const { return h_ < o.h_; }

   private:
    const FieldSpec* spec_;
    std::vector<int> h_;
};

/// The rational normal curve in PG(n, q): the points (1, x, x^2, ..., x^n)
/// for x in the field together with (0, ..., 0, 1).
inline std::vector<ProjectivePoint> nrc_points(int n, const FieldSpec& f) {
    if (n < 1) throw std::invalid_argument("nrc_points: n must be positive");
    std::vector<ProjectivePoint> pts;
    for (int x = 0; x < f.order(); ++x) {
        std::vector<int> c(n + 1);
        c[0] = 1;
        for (int i = 1; i <= n; ++i) c[i] = f.mul(c[i - 1], x);
        pts.emplace_back(f, std::move(c));
    }
    std::vector<int> inf(n + 1, 0);
    inf.back() = 1;
    pts.emplace_back(f, std::move(inf));
    return pts;
}

/// Degree-d Veronese image of a point of the projective line:
/// [x, y] -> [x^d, x^{d-1} y, ..., y^d].
inline ProjectivePoint veronese_map(const ProjectivePoint& p, int d) {
    if (p.dim() != 1) throw std::invalid_argument("veronese_map: point must lie on the projective line");
    if (d < 1) throw std::invalid_argument("veronese_map: degree must be positive");
    const FieldSpec& f = p.field();
    const int x = p.coords()[0], y = p.coords()[1];
    std::vector<int> xp(d + 1), yp(d + 1);
    xp[0] = yp[0] = 1;
    for (int i = 1; i <= d; ++i) {
        xp[i] = f.mul(xp[i - 1], x);
        yp[i] = f.mul(yp[i - 1], y);
    }
    std::vector<int> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = f.mul(xp[d - i], yp[i]);
    return ProjectivePoint(f, std::move(c));
}

namespace detail {

inline FqMatrix points_as_rows(const std::vector<ProjectivePoint>& pts, const std::vector<size_t>& which) {
    const FieldSpec& f = pts[0].field();
    std::vector<std::vector<int>> rows;
    for (size_t i : which) rows.push_back(pts[i].coords());
    return FqMatrix(f, std::move(rows));
}

}  // namespace detail

/// Arc test: every subset of min(n+1, k) of the k points is linearly
/// independent, where n is the shared ambient dimension.
inline bool is_k_arc(const std::vector<ProjectivePoint>& points) {
    if (points.empty()) return true;
    const int n = points[0].dim();
    for (const auto& p : points) {
        if (p.dim() != n) throw std::invalid_argument("is_k_arc: mixed ambient dimensions");
        if (!p.field().same(points[0].field())) throw FieldMismatch();
    }
    const size_t k = points.size();
    const size_t s = std::min<size_t>(n + 1, k);
    std::vector<size_t> pick(s);
    auto rec = [&](auto&& self, size_t pos, size_t next) -> bool {
        if (pos == s) {
            auto m = detail::points_as_rows(points, pick);
            return m.rank() == s;
        }
        for (size_t i = next; i + (s - pos) <= k; ++i) {
            pick[pos] = i;
            if (!self(self, pos + 1, i + 1)) return false;
        }
        return true;
    };
    return rec(rec, 0, 0);
}

/// Largest number of the given plane points on a common line, found by
/// sweeping every line of PG(2, q) as a dual point.
inline int max_collinear(const std::vector<ProjectivePoint>& points) {
    if (points.empty()) return 0;
    const FieldSpec& f = points[0].field();
    for (const auto& p : points) {
        if (p.dim() != 2) throw std::invalid_argument("max_collinear: points must lie in a projective plane");
        if (!p.field().same(f)) throw FieldMismatch();
    }
    int best = 0;
    const long long q = f.order();
    // canonical dual representatives: (1,b,c), (0,1,c), (0,0,1)
    std::vector<std::vector<int>> lines;
    for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) lines.push_back({1, b, c});
    for (int c = 0; c < q; ++c) lines.push_back({0, 1, c});
    lines.push_back({0, 0, 1});
    for (const auto& line : lines) {
        int count = 0;
        for (const auto& p : points) {
            int dot = 0;
            for (int i = 0; i < 3; ++i) dot = f.add(dot, f.mul(line[i], p.coords()[i]));
            if (dot == 0) ++count;
        }
        best = std::max(best, count);
    }
    return best;
}

/// { m in [0, n] : binom(m, j) != 0 mod p }, via the base-p digit criterion.
inline std::set<int> omega_set(int j, int n, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("omega_set: p must be prime");
    if (j < 0 || j > n) throw std::invalid_argument("omega_set: requires 0 <= j <= n");
    std::set<int> out;
    for (int m = 0; m <= n; ++m) {
        long long mm = m, jj = j;
        bool nonzero = true;
        while (jj > 0 || mm > 0) {
            if (jj % p > mm % p) {
                nonzero = false;
                break;
            }
            jj /= p;
            mm /= p;
        }
        if (nonzero) out.insert(m);
    }
    return out;
}

/// Closure of J under the reflection j -> n - j.
inline std::set<int> psi_closure(const std::set<int>& J, int n) {
    std::set<int> out;
    for (int j : J) {
        if (j < 0 || j > n) throw std::invalid_argument("psi_closure: element out of range");
        out.insert(j);
        out.insert(n - j);
    }
    return out;
}

/// Union closure m -> omega_set over a set of indices.
inline std::set<int> omega_closure(const std::set<int>& J, int n, long long p) {
    std::set<int> out;
    for (int j : J) {
        auto o = omega_set(j, n, p);
        out.insert(o.begin(), o.end());
    }
    return out;
}

struct CollineationReport {
    int n;
    long long q;
    bool all_diagonal_preserved = true;
    std::vector<std::pair<int, bool>> diagonal_results;  // (a, preserved) for each nonzero a
    bool reversal_preserved = false;
};

/// Applies the diagonal maps x_i -> a^i x_i for every nonzero a, and the
/// coordinate reversal, to the NRC point set; records whether each preserves
/// the set.
inline CollineationReport collineation_invariance_check(int n, const FieldSpec& f) {
    CollineationReport rep;
    rep.n = n;
    rep.q = f.order();
    auto pts = nrc_points(n, f);
    std::set<ProjectivePoint> original(pts.begin(), pts.end());

    for (int a = 1; a < f.order(); ++a) {
        std::set<ProjectivePoint> image;
        for (const auto& p : pts) {
            std::vector<int> c(n + 1);
            int power = 1;
            for (int i = 0; i <= n; ++i) {
                c[i] = f.mul(power, p.coords()[i]);
                power = f.mul(power, a);
            }
            image.emplace(f, std::move(c));
        }
        bool ok = image == original;
        rep.diagonal_results.emplace_back(a, ok);
        rep.all_diagonal_preserved = rep.all_diagonal_preserved && ok;
    }

    std::set<ProjectivePoint> reversed;
    for (const auto& p : pts) {
        std::vector<int> c(p.coords().rbegin(), p.coords().rend());
        reversed.emplace(f, std::move(c));
    }
    rep.reversal_preserved = reversed == original;
    return rep;
}

/// Orbit of the row space of U under right multiplication by the group
/// generated by the given invertible matrices. Subspaces are canonicalized by
/// reduced row echelon form; the orbit is returned sorted.
inline std::vector<FqMatrix> grassmann_orbit(const FqMatrix& U, const std::vector<FqMatrix>& generators) {
    const FieldSpec& f = U.field();
    const size_t k = U.rows(), n = U.cols();
    if (U.rank() != k) throw std::invalid_argument("grassmann_orbit: representative matrix must have full rank");
    for (const auto& g : generators) {
        if (!g.field().same(f)) throw FieldMismatch();
        if (g.rows() != n || g.cols() != n) throw std::invalid_argument("grassmann_orbit: generator dimension mismatch");
        if (g.rank() != n) throw std::invalid_argument("grassmann_orbit: singular generator");
    }
    std::set<std::vector<std::vector<int>>> seen;
    std::vector<FqMatrix> frontier{U.rref()};
    seen.insert(frontier[0].entries());
    while (!frontier.empty()) {
        std::vector<FqMatrix> next;
        for (const auto& s : frontier)
            for (const auto& g : generators) {
                FqMatrix image = (s * g).rref();
                if (seen.insert(image.entries()).second) next.push_back(std::move(image));
            }
        frontier = std::move(next);
    }
    std::vector<FqMatrix> out;
    for (const auto& e : seen) out.emplace_back(f, e);
    return out;
}

/// Generators of GL(n, q): an n-cycle permutation matrix, a transvection and
/// a primitive-element dilation.
inline std::vector<FqMatrix> general_linear_generators(const FieldSpec& f, size_t n) {
    std::vector<FqMatrix> gens;
    FqMatrix cyc(f, n, n);
    for (size_t i = 0; i < n; ++i) cyc.at(i, (i + 1) % n) = 1;
    gens.push_back(cyc);
    if (n >= 2) {
        FqMatrix trans = FqMatrix::identity(f, n);
        trans.at(0, 1) = 1;
        gens.push_back(trans);
    }
    if (f.order() > 2) {
        FqMatrix dil = FqMatrix::identity(f, n);
        dil.at(0, 0) = f.primitive_element();
        gens.push_back(dil);
    }
    return gens;
}

/// Permutation of {1..n} given by its image list.
class Permutation {
   public:
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> hit(img_.size(), false);
        for (int v : img_) {
            if (v < 1 || v > static_cast<int>(img_.size()) || hit[v - 1])
                throw std::invalid_argument("not a permutation");
            hit[v - 1] = true;
        }
    }
    int n() const { return static_cast<int>(img_.size()); }
    int apply(int i) const { return img_[i - 1]; }
    const std::vector<int>& images() const { return img_; }

   private:
    std::vector<int> img_;
};

enum class ConfigurationMode { Unordered, Ordered };

/// Orbit of a point configuration under the permutation group generated by
/// the given permutations. In unordered mode configurations are identified as
/// multisets.
template <class T>
std::set<std::vector<T>> configuration_orbits(const std::vector<T>& config,
                                               const std::vector<Permutation>& generators,
                                               ConfigurationMode mode) {
    const int n = static_cast<int>(config.size());
    for (const auto& g : generators)
        if (g.n() != n) throw std::invalid_argument("configuration_orbits: permutation size mismatch");

    auto canonical = [&](std::vector<T> v) {
        if (mode == ConfigurationMode::Unordered) std::sort(v.begin(), v.end());
        return v;
    };

    std::set<std::vector<T>> seen;
    std::vector<std::vector<T>> frontier{canonical(config)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<std::vector<T>> next;
        for (const auto& c : frontier)
            for (const auto& g : generators) {
                std::vector<T> image(c.size(), c[0]);
                for (int i = 1; i <= n; ++i) image[g.apply(i) - 1] = c[i - 1];
                image = canonical(std::move(image));
                if (seen.insert(image).second) next.push_back(std::move(image));
            }
        frontier = std::move(next);
    }
    return seen;
}

}  // namespace horncode

#endif
