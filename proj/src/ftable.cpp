#include "chomp3/ftable.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "chomp3/errors.hpp"

namespace chomp3 {

namespace {

// Columns that never settle keep growing until the end of the build, so
// their slack is paid in full; grow by an eighth rather than doubling.
template <class T>
void push_tight(std::vector<T>& v, const T& x) {
    if (v.size() == v.capacity()) v.reserve(v.capacity() + v.capacity() / 8 + 16);
    v.push_back(x);
}

}  // namespace

Value detail::PackedColumn::head(std::size_t i) const {
    const std::int16_t off = offsets[i];
    if (off != kPatched)
        return static_cast<Value>(static_cast<std::int64_t>(bases[i / kBlock]) + off);
    auto it = std::lower_bound(patches.begin(), patches.end(), i,
                               [](const Patch& p, std::size_t idx) { return p.index < idx; });
    return it->value;
}

void detail::PackedColumn::push_head(std::uint32_t value) {
    const std::size_t i = offsets.size();
    if (i % kBlock == 0) push_tight(bases, value);
    const std::int64_t off = static_cast<std::int64_t>(value) - bases[i / kBlock];
    if (off > kPatched && off <= INT16_MAX) {
        push_tight(offsets, static_cast<std::int16_t>(off));
    } else {
        push_tight(offsets, kPatched);
        patches.push_back(Patch{static_cast<std::uint32_t>(i), value});
    }
}

void detail::PackedColumn::shrink() {
    bases.shrink_to_fit();
    offsets.shrink_to_fit();
    patches.shrink_to_fit();
}

std::size_t detail::PackedColumn::bytes() const noexcept {
    return bases.capacity() * sizeof(std::uint32_t) + offsets.capacity() * sizeof(std::int16_t) +
           patches.capacity() * sizeof(Patch) + tail.capacity() * sizeof(Run);
}

FTable FTable::make_dense(Value n_max) {
    FTable t;
    t.n_max_ = n_max;
    t.layout_ = Layout::Dense;
    t.dense_values_.assign(tri(n_max + 1), 0);
    t.dense_mex_.assign(tri(n_max + 1), 0);
    return t;
}

void FTable::require_cell(Value q, Value r) const {
    if (r > q || q > n_max_) {
        throw OutOfRange("cell (" + std::to_string(q) + "," + std::to_string(r) +
                         ") outside table with n_max " + std::to_string(n_max_));
    }
}

Value FTable::f(Value q, Value r) const {
    require_cell(q, r);
    if (layout_ == Layout::Dense) return dense_values_[tri(q) + r];

    const detail::PackedColumn& col = columns_[r];
    if (col.tail.empty() || q < col.tail.front().q_start) {
        return col.head(std::min<Value>(q - r, col.head_size() - 1));
    }
    auto it = std::upper_bound(col.tail.begin(), col.tail.end(), q,
                               [](Value x, const Run& run) { return x < run.q_start; });
    return std::prev(it)->value;
}

bool FTable::is_mex_cell(Value q, Value r) const {
    require_cell(q, r);
    if (layout_ == Layout::Dense) return dense_mex_[tri(q) + r] != 0;

    const detail::PackedColumn& col = columns_[r];
    if (q - r < col.head_size()) return true;
    return std::binary_search(col.tail.begin(), col.tail.end(), Run{q, 0},
                              [](const Run& a, const Run& b) { return a.q_start < b.q_start; });
}

void FTable::for_each_run(Value r, const std::function<void(const Run&)>& visit) const {
    require_cell(r, r);
    if (layout_ == Layout::Sparse) {
        const detail::PackedColumn& col = columns_[r];
        for (std::size_t i = 0; i < col.head_size(); ++i) visit(Run{r + i, col.head(i)});
        for (const Run& run : col.tail) visit(run);
        return;
    }
    Value prev = 0;
    for (Value q = r; q <= n_max_; ++q) {
        const Value v = dense_values_[tri(q) + r];
        if (q == r || v != prev) visit(Run{q, v});
        prev = v;
    }
}

SparseColumn FTable::column(Value r) const {
    SparseColumn out{r, {}};
    for_each_run(r, [&](const Run& run) { out.runs.push_back(run); });
    return out;
}

void FTable::set(Value q, Value r, Value value, bool mex_cell) {
    require_cell(q, r);
    if (layout_ != Layout::Dense) throw std::logic_error("set() requires a dense table");
    dense_values_[tri(q) + r] = value;
    dense_mex_[tri(q) + r] = mex_cell ? 1 : 0;
}

void FTable::overwrite(Value q, Value r, Value value) {
    require_cell(q, r);
    if (layout_ != Layout::Dense) throw std::logic_error("overwrite() requires a dense table");
    dense_values_[tri(q) + r] = value;
}

std::size_t FTable::memory_bytes() const noexcept {
    std::size_t bytes = dense_values_.capacity() * sizeof(Value) + dense_mex_.capacity() +
                        columns_.capacity() * sizeof(detail::PackedColumn);
    for (const detail::PackedColumn& col : columns_) bytes += col.bytes();
    return bytes;
}

std::size_t FTable::mex_cell_count() const {
    if (layout_ == Layout::Dense) {
        return static_cast<std::size_t>(std::count(dense_mex_.begin(), dense_mex_.end(), 1));
    }
    std::size_t n = 0;
    for (const detail::PackedColumn& col : columns_) n += col.head_size() + col.tail.size();
    return n;
}

std::optional<CellMismatch> first_mismatch(const FTable& a, const FTable& b) {
    const Value n = std::min(a.n_max(), b.n_max());
    for (Value q = 0; q <= n; ++q) {
        for (Value r = 0; r <= q; ++r) {
            const Value x = a.f(q, r);
            const Value y = b.f(q, r);
            if (x != y || a.is_mex_cell(q, r) != b.is_mex_cell(q, r)) {
                return CellMismatch{q, r, x, y};
            }
        }
    }
    return std::nullopt;
}

}  // namespace chomp3
