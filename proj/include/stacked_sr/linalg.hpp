#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace stacked_sr {

// Exact linear algebra over the rationals for spans of integer vectors.
// The vectors that occur here are variable differences (one +1, one -1
// coordinate), so a fraction-free integer elimination stays tiny; rows are
// kept primitive (content 1, leading entry positive) which makes the reduced
// form canonical for a given span.
class IntSpan {
public:
    explicit IntSpan(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Adds v to the span. Returns true if the rank grew.
    bool add(std::vector<long long> v) {
        reduce(v);
        if (all_zero(v)) return false;
        normalize(v);
        rows_.push_back(std::move(v));
        resort();
        rref();
        return true;
    }

    bool contains(std::vector<long long> v) const {
        reduce(v);
        return all_zero(v);
    }

    bool contains_span(const IntSpan& other) const {
        for (const auto& r : other.rows_)
            if (!contains(r)) return false;
        return true;
    }

    bool equals(const IntSpan& other) const {
        return rank() == other.rank() && contains_span(other);
    }

    // Canonical serialization of the reduced row echelon basis.
    std::string key() const {
        std::string out;
        for (const auto& r : rows_) {
            for (long long x : r) {
                out += std::to_string(x);
                out += ',';
            }
            out += ';';
        }
        return out;
    }

private:
    static bool all_zero(const std::vector<long long>& v) {
        for (long long x : v)
            if (x) return false;
        return true;
    }

    static int lead(const std::vector<long long>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i]) return static_cast<int>(i);
        return -1;
    }

    static void normalize(std::vector<long long>& v) {
        long long g = 0;
        for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
        if (g > 1)
            for (long long& x : v) x /= g;
        int l = lead(v);
        if (l >= 0 && v[l] < 0)
            for (long long& x : v) x = -x;
    }

    // v <- lead-multiple elimination of v against the echelon rows.
    void reduce(std::vector<long long>& v) const {
        for (const auto& r : rows_) {
            int l = lead(r);
            if (l < 0 || v[static_cast<std::size_t>(l)] == 0) continue;
            long long a = v[static_cast<std::size_t>(l)];
            long long b = r[static_cast<std::size_t>(l)];
            long long g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
            long long mv = b / g;
            long long mr = a / g;
            for (std::size_t i = 0; i < v.size(); ++i) {
                v[i] = v[i] * mv - r[i] * mr;
                if (v[i] > (1LL << 56) || v[i] < -(1LL << 56))
                    throw std::overflow_error("IntSpan entry overflow");
            }
        }
        normalize(v);
    }

    void resort() {
        std::sort(rows_.begin(), rows_.end(),
                  [](const std::vector<long long>& a, const std::vector<long long>& b) {
                      return lead(a) < lead(b);
                  });
    }

    // Clears entries above each pivot; rows stay primitive.
    void rref() {
        for (std::size_t i = rows_.size(); i-- > 0;) {
            int l = lead(rows_[i]);
            if (l < 0) continue;
            for (std::size_t j = 0; j < i; ++j) {
                long long a = rows_[j][static_cast<std::size_t>(l)];
                if (!a) continue;
                long long b = rows_[i][static_cast<std::size_t>(l)];
                long long g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
                long long mj = b / g;
                long long mi = a / g;
                for (std::size_t c = 0; c < rows_[j].size(); ++c)
                    rows_[j][c] = rows_[j][c] * mj - rows_[i][c] * mi;
                normalize(rows_[j]);
            }
        }
    }

    int dim_;
    std::vector<std::vector<long long>> rows_;
};

}  // namespace stacked_sr
