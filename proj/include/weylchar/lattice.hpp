#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "weylchar/errors.hpp"

namespace weylchar {

// All lattice arithmetic is exact 64-bit integer arithmetic.
using Int = std::int64_t;
using Vec = std::vector<Int>;

inline Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw ConfigError("pairing: dimension mismatch (" + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()) + ")");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ConfigError("vector add: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ConfigError("vector sub: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec neg(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Vec scale(Int c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const Vec& a) {
    for (Int x : a)
        if (x != 0) return false;
    return true;
}

inline std::string vec_str(const Vec& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << a[i];
    }
    os << ')';
    return os.str();
}

// Square integer matrix, row-major.
struct Mat {
    int n = 0;
    std::vector<Int> a;

    Mat() = default;
    explicit Mat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0) {}

    static Mat identity(int dim) {
        Mat m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
        return m;
    }

    Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    Int at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    Vec apply(const Vec& v) const {
        if (static_cast<int>(v.size()) != n) throw ConfigError("matrix apply: dimension mismatch");
        Vec r(v.size(), 0);
        for (int i = 0; i < n; ++i) {
            Int s = 0;
            for (int j = 0; j < n; ++j) s += at(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }

    // (M^T) v
    Vec apply_transposed(const Vec& v) const {
        if (static_cast<int>(v.size()) != n) throw ConfigError("matrix apply: dimension mismatch");
        Vec r(v.size(), 0);
        for (int j = 0; j < n; ++j) {
            Int s = 0;
            for (int i = 0; i < n; ++i) s += at(i, j) * v[i];
            r[j] = s;
        }
        return r;
    }

    Mat mul(const Mat& o) const {
        if (n != o.n) throw ConfigError("matrix mul: dimension mismatch");
        Mat r(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                Int v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    Mat transposed() const {
        Mat r(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
    bool operator!=(const Mat& o) const { return !(*this == o); }
};

// Determinant by fraction-free Gaussian elimination (Bareiss). Exact for the
// small matrices used here.
inline Int det_bareiss(Mat m) {
    const int n = m.n;
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

} // namespace weylchar
