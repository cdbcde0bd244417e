#include "storagecode/bitmatrix.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace storagecode {

int dense_arity_limit() {
    static const int limit = [] {
        if (const char* env = std::getenv("STORAGECODE_MAX_ARITY")) {
            int v = std::atoi(env);
            if (v >= 1 && v <= kMaxAlgebraArity) return v;
        }
        return 15;
    }();
    return limit;
}

BitMatrix::BitMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), wpr((c + 63) / 64) {
    // the dense ceiling: 2^30 bits = 128 MB
    if (r && c && r > (std::size_t(1) << 30) / c)
        fail(errc::resource, "matrix " + std::to_string(r) + "x" + std::to_string(c) +
                                 " exceeds the dense ceiling");
    data.assign(r * wpr, 0);
}

namespace {

// lowest set column of a row at or after word `from`, or SIZE_MAX
std::size_t row_lead(const std::uint64_t* r, std::size_t wpr, std::size_t from) {
    for (std::size_t w = from; w < wpr; ++w)
        if (r[w]) return w * 64 + std::countr_zero(r[w]);
    return SIZE_MAX;
}

void xor_from(std::uint64_t* dst, const std::uint64_t* src, std::size_t from, std::size_t wpr) {
    for (std::size_t w = from; w < wpr; ++w) dst[w] ^= src[w];
}

} // namespace

EchelonInfo ref_in_place(BitMatrix& m) {
    // Rows wait in a queue per leading column; processing columns in order
    // pops each queue once, so every row XORs with each pivot at most once.
    EchelonInfo info;
    if (!m.rows || !m.cols) return info;
    std::vector<std::vector<std::uint32_t>> bucket(m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        std::size_t lead = row_lead(m.row(i), m.wpr, 0);
        if (lead != SIZE_MAX) bucket[lead].push_back(std::uint32_t(i));
    }
    for (std::size_t c = 0; c < m.cols; ++c) {
        auto& q = bucket[c];
        if (q.empty()) continue;
        const std::size_t pr = q.front();
        info.pivots.emplace_back(c, pr);
        const std::uint64_t* prow = m.row(pr);
        for (std::size_t t = 1; t < q.size(); ++t) {
            std::uint64_t* r = m.row(q[t]);
            xor_from(r, prow, c >> 6, m.wpr);
            std::size_t lead = row_lead(r, m.wpr, c >> 6);
            if (lead != SIZE_MAX) bucket[lead].push_back(q[t]);
        }
        q.clear();
        q.shrink_to_fit();
    }
    info.rank = info.pivots.size();
    return info;
}

EchelonInfo rref_in_place(BitMatrix& m) {
    EchelonInfo info = ref_in_place(m);
    // clear each pivot column above its pivot, right to left
    for (std::size_t k = info.pivots.size(); k-- > 0;) {
        const auto [c, pr] = info.pivots[k];
        const std::uint64_t* prow = m.row(pr);
        for (std::size_t j = 0; j < k; ++j) {
            std::uint64_t* r = m.row(info.pivots[j].second);
            if (r[c >> 6] >> (c & 63) & 1u) xor_from(r, prow, c >> 6, m.wpr);
        }
    }
    return info;
}

std::size_t rank_destructive(BitMatrix& m) { return ref_in_place(m).rank; }

std::size_t rank(const BitMatrix& m) {
    BitMatrix copy = m;
    return rank_destructive(copy);
}

namespace {

// 64x64 bit transpose (Hacker's Delight style butterfly)
void transpose64(std::uint64_t a[64]) {
    std::uint64_t mask = 0x00000000FFFFFFFFull;
    for (unsigned j = 32; j; j >>= 1, mask ^= mask << j) {
        for (unsigned k = 0; k < 64; k = (k + j + 1) & ~j) {
            std::uint64_t t = ((a[k] >> j) ^ a[k | j]) & mask;
            a[k | j] ^= t;
            a[k] ^= t << j;
        }
    }
}

} // namespace

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix out(m.cols, m.rows);
    std::uint64_t blk[64];
    for (std::size_t bi = 0; bi < m.rows; bi += 64) {
        const std::size_t bh = std::min<std::size_t>(64, m.rows - bi);
        for (std::size_t bw = 0; bw < m.wpr; ++bw) {
            for (std::size_t i = 0; i < bh; ++i) blk[i] = m.row(bi + i)[bw];
            for (std::size_t i = bh; i < 64; ++i) blk[i] = 0;
            transpose64(blk);
            // blk[j] now holds column bw*64+j of the stripe, i.e. bits of
            // output row bw*64+j at word bi/64
            const std::size_t limit = std::min<std::size_t>(64, m.cols - bw * 64);
            for (std::size_t j = 0; j < limit; ++j)
                out.row(bw * 64 + j)[bi >> 6] = blk[j];
        }
    }
    return out;
}

SubspaceBasis right_kernel(const BitMatrix& m) {
    BitMatrix work = m;
    EchelonInfo info = rref_in_place(work);
    std::vector<char> is_pivot(m.cols, 0);
    for (auto [c, r] : info.pivots) is_pivot[c] = 1;

    SubspaceBasis out;
    out.ambient_dim = m.cols;
    out.high_echelon = true;
    out.vectors = BitMatrix(m.cols - info.rank, m.cols);
    std::size_t idx = 0;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::uint64_t* krow = out.vectors.row(idx);
        krow[f >> 6] |= std::uint64_t(1) << (f & 63);
        // pivot entries: kernel vector's value at pivot column c_j is the
        // RREF entry (row j, column f); nonzero only when c_j < f, so the
        // trailing one of this vector is exactly f
        for (auto [c, r] : info.pivots) {
            if (c > f) break;
            if (work.row(r)[f >> 6] >> (f & 63) & 1u)
                krow[c >> 6] |= std::uint64_t(1) << (c & 63);
        }
        ++idx;
    }
    return out;
}

SubspaceBasis nullspace(const BitMatrix& m) { return right_kernel(transpose(m)); }

SubspaceBasis row_space(const BitMatrix& m) {
    BitMatrix work = m;
    EchelonInfo info = ref_in_place(work);
    SubspaceBasis out;
    out.ambient_dim = m.cols;
    out.vectors = BitMatrix(info.rank, m.cols);
    for (std::size_t k = 0; k < info.pivots.size(); ++k)
        std::copy_n(work.row(info.pivots[k].second), work.wpr, out.vectors.row(k));
    return out;
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim != b.ambient_dim)
        fail(errc::arity_mismatch, "subspace ambient dimensions differ");
    BitMatrix stack(a.dim() + b.dim(), a.ambient_dim);
    for (std::size_t i = 0; i < a.dim(); ++i)
        std::copy_n(a.vectors.row(i), a.vectors.wpr, stack.row(i));
    for (std::size_t i = 0; i < b.dim(); ++i)
        std::copy_n(b.vectors.row(i), b.vectors.wpr, stack.row(a.dim() + i));
    return row_space(stack);
}

SubspaceBasis subspace_intersection(const SubspaceBasis& a, const SubspaceBasis& b) {
    // Zassenhaus: eliminate [A|A; B|0]; rows whose left half vanished carry
    // intersection vectors in the right half.
    if (a.ambient_dim != b.ambient_dim)
        fail(errc::arity_mismatch, "subspace ambient dimensions differ");
    const std::size_t n = a.ambient_dim;
    BitMatrix z(a.dim() + b.dim(), 2 * n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const std::uint64_t* src = a.vectors.row(i);
        std::uint64_t* dst = z.row(i);
        for (std::size_t j = 0; j < n; ++j)
            if (src[j >> 6] >> (j & 63) & 1u) {
                dst[j >> 6] |= std::uint64_t(1) << (j & 63);
                dst[(j + n) >> 6] |= std::uint64_t(1) << ((j + n) & 63);
            }
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        const std::uint64_t* src = b.vectors.row(i);
        std::uint64_t* dst = z.row(a.dim() + i);
        for (std::size_t j = 0; j < n; ++j)
            if (src[j >> 6] >> (j & 63) & 1u) dst[j >> 6] |= std::uint64_t(1) << (j & 63);
    }
    EchelonInfo info = ref_in_place(z);
    std::vector<std::size_t> inter_rows;
    for (auto [c, r] : info.pivots)
        if (c >= n) inter_rows.push_back(r);
    SubspaceBasis out;
    out.ambient_dim = n;
    out.vectors = BitMatrix(inter_rows.size(), n);
    for (std::size_t k = 0; k < inter_rows.size(); ++k) {
        const std::uint64_t* src = z.row(inter_rows[k]);
        std::uint64_t* dst = out.vectors.row(k);
        for (std::size_t j = 0; j < n; ++j)
            if (src[(j + n) >> 6] >> ((j + n) & 63) & 1u)
                dst[j >> 6] |= std::uint64_t(1) << (j & 63);
    }
    return out;
}

namespace {

std::size_t row_trail(const std::uint64_t* r, std::size_t wpr) {
    for (std::size_t w = wpr; w-- > 0;)
        if (r[w]) return w * 64 + 63 - std::countl_zero(r[w]);
    return SIZE_MAX;
}

// basis row index keyed by leading (low) or trailing (high) one-position
std::vector<std::int32_t> echelon_index(const SubspaceBasis& s) {
    std::vector<std::int32_t> by_pos(s.ambient_dim, -1);
    for (std::size_t i = 0; i < s.vectors.rows; ++i) {
        std::size_t p = s.high_echelon ? row_trail(s.vectors.row(i), s.vectors.wpr)
                                       : row_lead(s.vectors.row(i), s.vectors.wpr, 0);
        by_pos[p] = std::int32_t(i);
    }
    return by_pos;
}

bool reduces_to_zero(const SubspaceBasis& s, const std::vector<std::int32_t>& by_pos, BitVec& r) {
    const auto& m = s.vectors;
    while (r.any()) {
        const std::size_t pos =
            s.high_echelon ? row_trail(r.w.data(), r.words()) : r.lowest();
        const std::int32_t i = by_pos[pos];
        if (i < 0) return false;
        const std::uint64_t* br = m.row(std::size_t(i));
        for (std::size_t k = 0; k < m.wpr; ++k) r.w[k] ^= br[k];
    }
    return true;
}

} // namespace

bool subspace_contains(const SubspaceBasis& s, const BitVec& v) {
    if (v.nbits != s.ambient_dim) fail(errc::arity_mismatch, "vector length mismatch");
    BitVec r = v;
    const auto by_pos = echelon_index(s);
    return reduces_to_zero(s, by_pos, r);
}

bool same_span(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim != b.ambient_dim || a.dim() != b.dim()) return false;
    const auto idx_a = echelon_index(a);
    const auto idx_b = echelon_index(b);
    BitVec tmp(a.ambient_dim);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        std::copy_n(a.vectors.row(i), a.vectors.wpr, tmp.w.begin());
        if (!reduces_to_zero(b, idx_b, tmp)) return false;
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        std::copy_n(b.vectors.row(i), b.vectors.wpr, tmp.w.begin());
        if (!reduces_to_zero(a, idx_a, tmp)) return false;
    }
    return true;
}

BitMatrix mult_operator_matrix(const AlgebraElement& f) {
    if (f.arity > dense_arity_limit())
        fail(errc::resource, "arity " + std::to_string(f.arity) + " exceeds dense ceiling " +
                                 std::to_string(dense_arity_limit()));
    const std::size_t n = f.size();
    BitMatrix m(n, n);
    for (std::size_t v = 0; v < n; ++v)
        xor_shift_words(m.row(v), f.coeffs.w.data(), m.wpr, v);
    return m;
}

void write_matrix(std::ostream& out, const BitMatrix& m) {
    out << "gf2 " << m.rows << " " << m.cols << "\n";
    char buf[17];
    for (std::size_t i = 0; i < m.rows; ++i) {
        const std::uint64_t* r = m.row(i);
        for (std::size_t w = 0; w < m.wpr; ++w) {
            std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(r[w]));
            if (w) out << ' ';
            out << buf;
        }
        out << '\n';
    }
    if (!out) fail(errc::io, "matrix write failed");
}

BitMatrix read_matrix(std::istream& in) {
    std::string magic;
    std::size_t rows = 0, cols = 0;
    if (!(in >> magic >> rows >> cols) || magic != "gf2")
        fail(errc::parse, "bad matrix header (want 'gf2 <rows> <cols>')");
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        std::uint64_t* r = m.row(i);
        for (std::size_t w = 0; w < m.wpr; ++w) {
            std::string tok;
            if (!(in >> tok)) fail(errc::parse, "matrix body truncated");
            std::uint64_t val = 0;
            auto res = std::from_chars(tok.data(), tok.data() + tok.size(), val, 16);
            if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
                fail(errc::parse, "bad hex word '" + tok + "'");
            r[w] = val;
        }
        // pad bits must be zero
        if (cols & 63) {
            const std::uint64_t pad = ~((std::uint64_t(1) << (cols & 63)) - 1);
            if (r[m.wpr - 1] & pad) fail(errc::parse, "nonzero pad bits in matrix row");
        }
    }
    return m;
}

} // namespace storagecode
