#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabmc/rational.hpp"

namespace stabmc {

using QubitId = uint32_t;

enum class GateKind : uint8_t { Had, Ph, X };

inline constexpr unsigned kDefaultSupportCap = 20;

struct MeasurementResult {
    bool random = false;
    bool value = false;  // meaningful only when !random

    static MeasurementResult deterministic(bool b) { return {false, b}; }
    static MeasurementResult random_outcome() { return {true, false}; }
};

/// Amplitude of one computational-basis state of a stabilizer state:
/// i^phase_power * 2^(-halflog/2), or exactly zero.
struct ExactAmplitude {
    uint8_t phase_power = 0;
    uint32_t halflog = 0;
    bool zero = false;

    static ExactAmplitude null() { return {0, 0, true}; }

    double magnitude() const { return zero ? 0.0 : std::exp2(-0.5 * halflog); }
    double re() const {
        if (zero || (phase_power & 1)) return 0.0;
        return phase_power == 0 ? magnitude() : -magnitude();
    }
    double im() const {
        if (zero || !(phase_power & 1)) return 0.0;
        return phase_power == 1 ? magnitude() : -magnitude();
    }
    // Exact value when it is rational (zero component or even halflog).
    bool re_exact(Rational& out) const {
        if (zero || (phase_power & 1)) { out = Rational(0); return true; }
        if (halflog % 2) return false;
        long long mag = 1LL << (halflog / 2);
        out = Rational(phase_power == 0 ? 1 : -1, mag);
        return true;
    }
    bool im_exact(Rational& out) const {
        if (zero || !(phase_power & 1)) { out = Rational(0); return true; }
        if (halflog % 2) return false;
        long long mag = 1LL << (halflog / 2);
        out = Rational(phase_power == 1 ? 1 : -1, mag);
        return true;
    }

    bool operator==(const ExactAmplitude&) const = default;
};

struct SupportValuation {
    std::vector<bool> bits;  // bits[q] = value of qubit q
    ExactAmplitude amplitude;
};

class SupportTooLarge : public std::runtime_error {
  public:
    SupportTooLarge(unsigned k, unsigned cap)
        : std::runtime_error("support size 2^" + std::to_string(k) +
                             " exceeds cap 2^" + std::to_string(cap)),
          k_(k),
          cap_(cap) {}
    unsigned exponent() const { return k_; }
    unsigned cap() const { return cap_; }

  private:
    unsigned k_, cap_;
};

class EntangledSubsystem : public std::runtime_error {
  public:
    EntangledSubsystem() : std::runtime_error("subsystem is entangled with the rest") {}
};

namespace detail {

/// Sign-tracked Pauli string: i^phase * product of single-qubit operators,
/// where (x,z) = (1,1) denotes Y itself (not XZ).
struct PauliRow {
    std::vector<uint64_t> x, z;
    uint8_t phase = 0;  // i^phase, mod 4

    bool xbit(size_t q) const { return (x[q >> 6] >> (q & 63)) & 1; }
    bool zbit(size_t q) const { return (z[q >> 6] >> (q & 63)) & 1; }
};

/// Phase exponent (mod 4) picked up when forming the product L*R,
/// excluding the factors' own phases.
inline int product_phase_exponent(const uint64_t* lx, const uint64_t* lz,
                                  const uint64_t* rx, const uint64_t* rz, size_t words) {
    long long plus = 0, minus = 0;
    for (size_t w = 0; w < words; ++w) {
        uint64_t a = lx[w], b = lz[w], c = rx[w], d = rz[w];
        // +i cases: Y*Z, X*Y, Z*X; -i cases: Y*X, X*Z, Z*Y
        uint64_t p = (a & b & ~c & d) | (a & ~b & c & d) | (~a & b & c & ~d);
        uint64_t m = (a & b & c & ~d) | (a & ~b & ~c & d) | (~a & b & c & d);
        plus += std::popcount(p);
        minus += std::popcount(m);
    }
    return static_cast<int>(((plus - minus) % 4 + 4) % 4);
}

inline void left_mult(PauliRow& target, const PauliRow& by) {
    size_t words = target.x.size();
    int e = product_phase_exponent(by.x.data(), by.z.data(), target.x.data(), target.z.data(),
                                   words);
    target.phase = static_cast<uint8_t>((target.phase + by.phase + e) & 3);
    for (size_t w = 0; w < words; ++w) {
        target.x[w] ^= by.x[w];
        target.z[w] ^= by.z[w];
    }
}

/// Extracts every nonzero computational-basis component of the state fixed
/// by `rows` (an independent set of n commuting sign-tracked Pauli strings
/// on n qubits). Amplitudes share magnitude 2^(-g/2) where 2^g is the
/// support size; phases are normalized so the lexicographically smallest
/// element gets +1. Result is sorted by bit string.
inline std::vector<SupportValuation> enumerate_support(size_t n, std::vector<PauliRow> rows,
                                                       unsigned cap) {
    const size_t words = (n + 63) / 64;

    // Bring the x-part to reduced form; the x-pivot rows span the support coset.
    size_t pivot = 0;
    for (size_t j = 0; j < n && pivot < rows.size(); ++j) {
        size_t k = pivot;
        while (k < rows.size() && !rows[k].xbit(j)) ++k;
        if (k == rows.size()) continue;
        std::swap(rows[pivot], rows[k]);
        for (size_t m = 0; m < rows.size(); ++m)
            if (m != pivot && rows[m].xbit(j)) left_mult(rows[m], rows[pivot]);
        ++pivot;
    }
    const unsigned g = static_cast<unsigned>(pivot);
    if (g > cap) throw SupportTooLarge(g, cap);
    if (g >= 62) throw SupportTooLarge(g, cap);

    // Remaining rows are Z-strings; reduce them to find one support element.
    std::vector<int> zpivot_col(rows.size(), -1);
    size_t zp = pivot;
    for (size_t j = 0; j < n && zp < rows.size(); ++j) {
        size_t k = zp;
        while (k < rows.size() && !rows[k].zbit(j)) ++k;
        if (k == rows.size()) continue;
        std::swap(rows[zp], rows[k]);
        for (size_t m = pivot; m < rows.size(); ++m)
            if (m != zp && rows[m].zbit(j)) left_mult(rows[m], rows[zp]);
        zpivot_col[zp] = static_cast<int>(j);
        ++zp;
    }
    assert(zp == rows.size() && "generator set must be independent");

    PauliRow scratch;
    scratch.x.assign(words, 0);
    scratch.z.assign(words, 0);
    for (size_t i = pivot; i < rows.size(); ++i) {
        assert((rows[i].phase & 1) == 0);
        if (rows[i].phase == 2) {
            size_t j = static_cast<size_t>(zpivot_col[i]);
            scratch.x[j >> 6] ^= uint64_t{1} << (j & 63);
        }
    }

    std::vector<SupportValuation> out;
    out.reserve(size_t{1} << g);
    auto emit = [&] {
        SupportValuation v;
        v.bits.resize(n);
        long long ycount = 0;
        for (size_t w = 0; w < words; ++w) ycount += std::popcount(scratch.x[w] & scratch.z[w]);
        for (size_t j = 0; j < n; ++j) v.bits[j] = scratch.xbit(j);
        v.amplitude.phase_power = static_cast<uint8_t>((scratch.phase + ycount) & 3);
        v.amplitude.halflog = g;
        out.push_back(std::move(v));
    };
    emit();
    for (uint64_t t = 0; t + 1 < (uint64_t{1} << g); ++t) {
        unsigned toggle = static_cast<unsigned>(std::countr_one(t));
        left_mult(scratch, rows[toggle]);
        emit();
    }

    auto smallest = std::min_element(out.begin(), out.end(),
                                     [](const auto& a, const auto& b) { return a.bits < b.bits; });
    uint8_t delta = smallest->amplitude.phase_power;
    for (auto& v : out)
        v.amplitude.phase_power = static_cast<uint8_t>((v.amplitude.phase_power + 4 - delta) & 3);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.bits < b.bits; });
    return out;
}

}  // namespace detail

/// Binary-matrix representation of an n-qubit stabilizer state: n
/// destabilizer rows followed by n stabilizer rows, each a Pauli string
/// with a sign bit, packed 64 columns to a word.
///
/// Tableau is a plain value: callers that need branching semantics copy it
/// and mutate the copy. Gates are O(n) word operations, measurement O(n^2).
class Tableau {
  public:
    Tableau() = default;

    explicit Tableau(size_t n) : n_(n), words_((n + 63) / 64) {
        x_.assign(2 * n_ * words_, 0);
        z_.assign(2 * n_ * words_, 0);
        r_.assign(2 * n_, 0);
        for (size_t i = 0; i < n_; ++i) {
            set_xbit(i, i);           // destabilizer i = X_i
            set_zbit(n_ + i, i);      // stabilizer i = Z_i
        }
    }

    size_t qubit_count() const { return n_; }

    bool operator==(const Tableau&) const = default;

    /// Appends a fresh |0> qubit; existing qubit ids are unchanged.
    QubitId extend() {
        Tableau t(n_ + 1);
        for (size_t i = 0; i < n_; ++i) {
            t.copy_row_from(*this, i, i);                  // destabilizers keep their slots
            t.copy_row_from(*this, n_ + 1 + i, n_ + i);    // stabilizers shift by one
        }
        *this = std::move(t);
        return static_cast<QubitId>(n_ - 1);
    }

    void apply(GateKind g, QubitId q) {
        check_qubit(q);
        const size_t w = q >> 6;
        const uint64_t mask = uint64_t{1} << (q & 63);
        for (size_t i = 0; i < 2 * n_; ++i) {
            uint64_t& xw = x_[i * words_ + w];
            uint64_t& zw = z_[i * words_ + w];
            const bool xq = xw & mask, zq = zw & mask;
            switch (g) {
                case GateKind::Had:
                    r_[i] ^= xq && zq;
                    if (xq != zq) { xw ^= mask; zw ^= mask; }
                    break;
                case GateKind::Ph:
                    r_[i] ^= xq && zq;
                    if (xq) zw ^= mask;
                    break;
                case GateKind::X:
                    r_[i] ^= zq;
                    break;
            }
        }
    }

    void apply_cnot(QubitId c, QubitId t) {
        check_qubit(c);
        check_qubit(t);
        if (c == t) throw std::invalid_argument("cnot: control equals target");
        const size_t cw = c >> 6, tw = t >> 6;
        const uint64_t cm = uint64_t{1} << (c & 63), tm = uint64_t{1} << (t & 63);
        for (size_t i = 0; i < 2 * n_; ++i) {
            uint64_t& xc = x_[i * words_ + cw];
            uint64_t& zc = z_[i * words_ + cw];
            uint64_t& xt = x_[i * words_ + tw];
            uint64_t& zt = z_[i * words_ + tw];
            const bool bxc = xc & cm, bzc = zc & cm, bxt = xt & tm, bzt = zt & tm;
            r_[i] ^= bxc && bzt && (bxt == bzc);
            if (bxc) xt ^= tm;
            if (bzt) zc ^= cm;
        }
    }

    /// Non-mutating measurement query: deterministic outcome (state already
    /// an eigenstate of Z_q) or random (both outcomes, probability 1/2 each).
    MeasurementResult measure(QubitId q) const {
        check_qubit(q);
        for (size_t i = n_; i < 2 * n_; ++i)
            if (xbit(i, q)) return MeasurementResult::random_outcome();
        // Deterministic: accumulate the stabilizer rows flagged by the
        // destabilizers into +-Z_q and read off the sign.
        detail::PauliRow acc;
        acc.x.assign(words_, 0);
        acc.z.assign(words_, 0);
        for (size_t i = 0; i < n_; ++i)
            if (xbit(i, q)) mult_row_into(acc, n_ + i);
        assert((acc.phase & 1) == 0);
        return MeasurementResult::deterministic(acc.phase == 2);
    }

    /// Projects onto the chosen outcome of a random measurement.
    void collapse(QubitId q, bool outcome) {
        check_qubit(q);
        size_t p = n_;
        while (p < 2 * n_ && !xbit(p, q)) ++p;
        if (p == 2 * n_)
            throw std::logic_error("collapse: measurement outcome is deterministic");
        const size_t d = p - n_;
        copy_row_from(*this, d, p);  // destabilizer slot keeps the replaced generator
        clear_row(p);
        set_zbit(p, q);
        r_[p] = outcome ? 1 : 0;
        for (size_t i = 0; i < 2 * n_; ++i)
            if (i != d && xbit(i, q)) rowsum(i, d);
    }

    std::vector<SupportValuation> support_valuations(unsigned cap = kDefaultSupportCap) const {
        return detail::enumerate_support(n_, stabilizer_pauli_rows(), cap);
    }

    /// Probability that `pred` holds over the basis states in the support,
    /// as an exact dyadic rational (all support amplitudes share magnitude).
    template <class Pred>
    Rational probability(Pred&& pred, unsigned cap = kDefaultSupportCap) const {
        auto vals = support_valuations(cap);
        long long count = 0;
        for (const auto& v : vals) count += static_cast<bool>(pred(v.bits));
        unsigned g = vals.empty() ? 0 : vals.front().amplitude.halflog;
        return Rational::from_pow2(count, g);
    }

    /// True iff the state factors as (state on `subsys`) x (state on the
    /// rest). Decided by GF(2) rank of the stabilizer rows restricted to the
    /// subsystem's x- and z-columns; no support enumeration.
    bool is_unentangled(const std::vector<QubitId>& subsys) const {
        std::vector<QubitId> ids = checked_unique(subsys);
        const size_t a = ids.size();
        if (a == 0 || a == n_) return true;
        const size_t rwords = (2 * a + 63) / 64;
        std::vector<uint64_t> m(n_ * rwords, 0);
        for (size_t i = 0; i < n_; ++i)
            for (size_t k = 0; k < a; ++k) {
                if (xbit(n_ + i, ids[k])) m[i * rwords + (k >> 6)] |= uint64_t{1} << (k & 63);
                size_t c = a + k;
                if (zbit(n_ + i, ids[k])) m[i * rwords + (c >> 6)] |= uint64_t{1} << (c & 63);
            }
        size_t rank = 0;
        for (size_t col = 0; col < 2 * a && rank < n_; ++col) {
            const size_t w = col >> 6;
            const uint64_t mask = uint64_t{1} << (col & 63);
            size_t k = rank;
            while (k < n_ && !(m[k * rwords + w] & mask)) ++k;
            if (k == n_) continue;
            for (size_t ww = 0; ww < rwords; ++ww)
                std::swap(m[rank * rwords + ww], m[k * rwords + ww]);
            for (size_t i = rank + 1; i < n_; ++i)
                if (m[i * rwords + w] & mask)
                    for (size_t ww = 0; ww < rwords; ++ww) m[i * rwords + ww] ^= m[rank * rwords + ww];
            ++rank;
        }
        return rank == a;
    }

    /// Amplitude of basis state `bits` (ordered like `subsys`) in the factor
    /// state on `subsys`. The subsystem must be unentangled from the rest;
    /// phases follow the support_valuations normalization. A basis state
    /// outside the factor's support yields the distinct zero amplitude.
    ExactAmplitude amplitude(const std::vector<QubitId>& subsys, const std::vector<bool>& bits,
                             unsigned cap = kDefaultSupportCap) const {
        std::vector<QubitId> ids = checked_unique(subsys);
        if (ids.size() != subsys.size())
            throw std::invalid_argument("amplitude: duplicate qubit in subsystem");
        if (bits.size() != subsys.size())
            throw std::invalid_argument("amplitude: bit vector length mismatch");

        std::vector<bool> in_subsys(n_, false);
        for (QubitId q : subsys) in_subsys[q] = true;

        // Row-reduce over the complement's columns; rows left with identity
        // there generate the factor's stabilizer group.
        auto rows = stabilizer_pauli_rows();
        size_t pivot = 0;
        for (size_t j = 0; j < n_; ++j) {
            if (in_subsys[j]) continue;
            for (int part = 0; part < 2; ++part) {
                auto bit = [&](const detail::PauliRow& r) { return part == 0 ? r.xbit(j) : r.zbit(j); };
                size_t k = pivot;
                while (k < rows.size() && !bit(rows[k])) ++k;
                if (k == rows.size()) continue;
                std::swap(rows[pivot], rows[k]);
                for (size_t mrow = 0; mrow < rows.size(); ++mrow)
                    if (mrow != pivot && bit(rows[mrow])) detail::left_mult(rows[mrow], rows[pivot]);
                ++pivot;
            }
        }
        if (n_ - pivot != subsys.size()) throw EntangledSubsystem();

        const size_t a = subsys.size();
        const size_t awords = (a + 63) / 64;
        std::vector<detail::PauliRow> local(n_ - pivot);
        for (size_t i = pivot; i < rows.size(); ++i) {
            detail::PauliRow& lr = local[i - pivot];
            lr.x.assign(awords, 0);
            lr.z.assign(awords, 0);
            lr.phase = rows[i].phase;
            assert((lr.phase & 1) == 0);
            for (size_t k = 0; k < a; ++k) {
                if (rows[i].xbit(subsys[k])) lr.x[k >> 6] |= uint64_t{1} << (k & 63);
                if (rows[i].zbit(subsys[k])) lr.z[k >> 6] |= uint64_t{1} << (k & 63);
            }
        }
        auto vals = detail::enumerate_support(a, std::move(local), cap);
        for (const auto& v : vals)
            if (v.bits == bits) return v.amplitude;
        return ExactAmplitude::null();
    }

    /// Debug rendering: destabilizer rows, a separator, stabilizer rows.
    std::string dump() const {
        std::ostringstream os;
        for (size_t i = 0; i < 2 * n_; ++i) {
            if (i == n_) os << "---\n";
            os << (r_[i] ? '-' : '+');
            for (size_t q = 0; q < n_; ++q) {
                bool xq = xbit(i, q), zq = zbit(i, q);
                os << (xq ? (zq ? 'Y' : 'X') : (zq ? 'Z' : 'I'));
            }
            os << '\n';
        }
        return os.str();
    }

    /// Structural validation: full rank over GF(2), stabilizers pairwise
    /// commuting, destabilizer i anticommuting with stabilizer i only.
    bool check_invariants() const {
        for (size_t i = n_; i < 2 * n_; ++i)
            for (size_t j = i + 1; j < 2 * n_; ++j)
                if (!commutes(i, j)) return false;
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = 0; j < n_; ++j)
                if (commutes(i, n_ + j) != (i != j)) return false;
        // rank of the 2n x 2n (x|z) matrix
        const size_t rwords = 2 * words_;
        std::vector<uint64_t> m(2 * n_ * rwords);
        for (size_t i = 0; i < 2 * n_; ++i) {
            for (size_t w = 0; w < words_; ++w) {
                m[i * rwords + w] = x_[i * words_ + w];
                m[i * rwords + words_ + w] = z_[i * words_ + w];
            }
        }
        size_t rank = 0;
        for (size_t col = 0; col < 2 * n_ && rank < 2 * n_; ++col) {
            const size_t cw = (col < n_ ? col >> 6 : words_ + ((col - n_) >> 6));
            const uint64_t mask = uint64_t{1} << ((col < n_ ? col : col - n_) & 63);
            size_t k = rank;
            while (k < 2 * n_ && !(m[k * rwords + cw] & mask)) ++k;
            if (k == 2 * n_) continue;
            for (size_t w = 0; w < rwords; ++w) std::swap(m[rank * rwords + w], m[k * rwords + w]);
            for (size_t i = rank + 1; i < 2 * n_; ++i)
                if (m[i * rwords + cw] & mask)
                    for (size_t w = 0; w < rwords; ++w) m[i * rwords + w] ^= m[rank * rwords + w];
            ++rank;
        }
        return rank == 2 * n_;
    }

  private:
    void check_qubit(QubitId q) const {
        if (q >= n_) throw std::out_of_range("invalid qubit id");
    }

    std::vector<QubitId> checked_unique(const std::vector<QubitId>& ids) const {
        std::vector<QubitId> out(ids);
        for (QubitId q : out) check_qubit(q);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    bool xbit(size_t row, size_t q) const { return (x_[row * words_ + (q >> 6)] >> (q & 63)) & 1; }
    bool zbit(size_t row, size_t q) const { return (z_[row * words_ + (q >> 6)] >> (q & 63)) & 1; }
    void set_xbit(size_t row, size_t q) { x_[row * words_ + (q >> 6)] |= uint64_t{1} << (q & 63); }
    void set_zbit(size_t row, size_t q) { z_[row * words_ + (q >> 6)] |= uint64_t{1} << (q & 63); }

    void clear_row(size_t row) {
        std::fill_n(x_.begin() + row * words_, words_, 0);
        std::fill_n(z_.begin() + row * words_, words_, 0);
        r_[row] = 0;
    }

    void copy_row_from(const Tableau& src, size_t dst_row, size_t src_row) {
        std::copy_n(src.x_.begin() + src_row * src.words_, src.words_, x_.begin() + dst_row * words_);
        std::copy_n(src.z_.begin() + src_row * src.words_, src.words_, z_.begin() + dst_row * words_);
        r_[dst_row] = src.r_[src_row];
    }

    bool commutes(size_t i, size_t j) const {
        long long acc = 0;
        for (size_t w = 0; w < words_; ++w) {
            acc += std::popcount(x_[i * words_ + w] & z_[j * words_ + w]);
            acc += std::popcount(z_[i * words_ + w] & x_[j * words_ + w]);
        }
        return (acc & 1) == 0;
    }

    // row h := row i * row h, with exact sign tracking. Target rows of
    // interest always end with a +-1 phase; destabilizer bookkeeping keeps
    // the high bit only.
    void rowsum(size_t h, size_t i) {
        int e = detail::product_phase_exponent(&x_[i * words_], &z_[i * words_], &x_[h * words_],
                                               &z_[h * words_], words_);
        int total = (2 * r_[h] + 2 * r_[i] + e) & 3;
        r_[h] = static_cast<uint8_t>(total >> 1);
        for (size_t w = 0; w < words_; ++w) {
            x_[h * words_ + w] ^= x_[i * words_ + w];
            z_[h * words_ + w] ^= z_[i * words_ + w];
        }
    }

    // acc := (tableau row) * acc with the row's phase included.
    void mult_row_into(detail::PauliRow& acc, size_t row) const {
        int e = detail::product_phase_exponent(&x_[row * words_], &z_[row * words_], acc.x.data(),
                                               acc.z.data(), words_);
        acc.phase = static_cast<uint8_t>((acc.phase + 2 * r_[row] + e) & 3);
        for (size_t w = 0; w < words_; ++w) {
            acc.x[w] ^= x_[row * words_ + w];
            acc.z[w] ^= z_[row * words_ + w];
        }
    }

    std::vector<detail::PauliRow> stabilizer_pauli_rows() const {
        std::vector<detail::PauliRow> rows(n_);
        for (size_t i = 0; i < n_; ++i) {
            rows[i].x.assign(x_.begin() + (n_ + i) * words_, x_.begin() + (n_ + i + 1) * words_);
            rows[i].z.assign(z_.begin() + (n_ + i) * words_, z_.begin() + (n_ + i + 1) * words_);
            rows[i].phase = static_cast<uint8_t>(2 * r_[n_ + i]);
        }
        return rows;
    }

    size_t n_ = 0;
    size_t words_ = 0;
    std::vector<uint64_t> x_, z_;
    std::vector<uint8_t> r_;
};

}  // namespace stabmc
