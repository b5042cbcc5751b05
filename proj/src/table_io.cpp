#include "chomp3/table_io.hpp"

#include <charconv>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "chomp3/errors.hpp"

namespace chomp3 {

ExportFormat parse_format(std::string_view name) {
    if (name == "csv") return ExportFormat::Csv;
    if (name == "jsonl") return ExportFormat::Jsonl;
    if (name == "runs") return ExportFormat::Runs;
    throw FormatError("unknown format '" + std::string(name) + "' (expected csv, jsonl or runs)");
}

namespace {

class LineWriter {
public:
    explicit LineWriter(std::ostream& out) : out_(out) { buf_.reserve(kFlushAt + 256); }
    ~LineWriter() { flush(); }

    LineWriter& operator<<(Value v) {
        char tmp[24];
        auto [end, ec] = std::to_chars(tmp, tmp + sizeof tmp, v);
        buf_.append(tmp, end);
        return *this;
    }
    LineWriter& operator<<(std::string_view s) {
        buf_.append(s);
        if (buf_.size() >= kFlushAt) flush();
        return *this;
    }
    void flush() {
        out_.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
        buf_.clear();
    }

private:
    static constexpr std::size_t kFlushAt = 1 << 16;
    std::ostream& out_;
    std::string buf_;
};

}  // namespace

void write_table(std::ostream& out, const FTable& table, ExportFormat format) {
    LineWriter w(out);
    const Value n = table.n_max();
    switch (format) {
        case ExportFormat::Csv:
            w << "q,r,f\n";
            for (Value q = 0; q <= n; ++q) {
                for (Value r = 0; r <= q; ++r) w << q << "," << r << "," << table.f(q, r) << "\n";
            }
            break;
        case ExportFormat::Jsonl:
            for (Value q = 0; q <= n; ++q) {
                for (Value r = 0; r <= q; ++r) {
                    w << "{\"q\":" << q << ",\"r\":" << r << ",\"f\":" << table.f(q, r)
                      << ",\"mex_cell\":" << (table.is_mex_cell(q, r) ? "true" : "false") << "}\n";
                }
            }
            break;
        case ExportFormat::Runs:
            for (Value r = 0; r <= n; ++r) {
                w << r << ";";
                bool first = true;
                table.for_each_run(r, [&](const Run& run) {
                    if (!first) w << ",";
                    first = false;
                    w << run.q_start << ":" << run.value;
                });
                w << "\n";
            }
            break;
    }
    w.flush();
}

namespace {

struct Cell {
    Value q;
    Value r;
    Value f;
    bool mex_cell;
};

/// Cells must arrive in export order and cover a full triangle.
FTable assemble(const std::vector<Cell>& cells, bool derive_flags) {
    if (cells.empty()) throw FormatError("table file has no cells");
    const Value n = cells.back().q;
    const std::size_t expected = static_cast<std::size_t>((n + 1) * (n + 2) / 2);
    if (cells.size() != expected) {
        throw FormatError("expected " + std::to_string(expected) + " cells for n_max " +
                          std::to_string(n) + ", got " + std::to_string(cells.size()));
    }
    FTable table = FTable::make_dense(n);
    std::size_t i = 0;
    for (Value q = 0; q <= n; ++q) {
        for (Value r = 0; r <= q; ++r, ++i) {
            const Cell& c = cells[i];
            if (c.q != q || c.r != r) {
                throw FormatError("cell " + std::to_string(i) + " is (" + std::to_string(c.q) +
                                  "," + std::to_string(c.r) + "), expected (" + std::to_string(q) +
                                  "," + std::to_string(r) + ")");
            }
            bool mex_cell = c.mex_cell;
            if (derive_flags) mex_cell = !(q > r && table.f(q - 1, r) < q);
            table.set(q, r, c.f, mex_cell);
        }
    }
    return table;
}

Value parse_field(std::string_view s, std::size_t line_no) {
    Value v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw FormatError("line " + std::to_string(line_no) + ": bad integer '" + std::string(s) +
                          "'");
    }
    return v;
}

}  // namespace

FTable read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "q,r,f") throw FormatError("missing header 'q,r,f'");
    std::vector<Cell> cells;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::string_view s(line);
        const auto c1 = s.find(',');
        const auto c2 = c1 == std::string_view::npos ? c1 : s.find(',', c1 + 1);
        if (c2 == std::string_view::npos) {
            throw FormatError("line " + std::to_string(line_no) + ": expected q,r,f");
        }
        cells.push_back({parse_field(s.substr(0, c1), line_no),
                         parse_field(s.substr(c1 + 1, c2 - c1 - 1), line_no),
                         parse_field(s.substr(c2 + 1), line_no), false});
    }
    return assemble(cells, true);
}

FTable read_jsonl(std::istream& in) {
    std::string line;
    std::vector<Cell> cells;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            cells.push_back({j.at("q").get<Value>(), j.at("r").get<Value>(), j.at("f").get<Value>(),
                             j.at("mex_cell").get<bool>()});
        } catch (const nlohmann::json::exception& e) {
            throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return assemble(cells, false);
}

}  // namespace chomp3
