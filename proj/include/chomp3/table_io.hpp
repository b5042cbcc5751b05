#pragma once

#include <iosfwd>
#include <string_view>

#include "chomp3/ftable.hpp"

namespace chomp3 {

enum class ExportFormat { Csv, Jsonl, Runs };

/// "csv", "jsonl" or "runs"; throws FormatError otherwise.
ExportFormat parse_format(std::string_view name);

/// Writes every cell (q ascending, r ascending) or, for Runs, one column per
/// line as "r;q_start:value,q_start:value,...".
///
///   csv    header "q,r,f", then "q,r,f" per cell
///   jsonl  {"q":0,"r":0,"f":1,"mex_cell":true} per cell
void write_table(std::ostream& out, const FTable& table, ExportFormat format);

/// Reads a CSV export back into a dense table. The file carries no branch
/// flags, so each cell's flag is rederived from the branch condition
/// (q > r and f(q-1,r) < q means the constant branch).
FTable read_csv(std::istream& in);

/// Reads a JSONL export back into a dense table.
FTable read_jsonl(std::istream& in);

}  // namespace chomp3
