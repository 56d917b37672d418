#ifndef HFF_TOOLS_REPORT_HPP
#define HFF_TOOLS_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hff/numeric.hpp"

namespace hff::cli {

// One measured quantity at one parameter point.
struct Row {
    std::string experiment;
    std::int64_t H = 0;        // 0 when not applicable
    std::int64_t Hprime = 0;   // 0 when not applicable
    std::string mode = "-";    // "plain" | "epsilon" | "-"
    std::string param;         // e.g. "xi=2;s=4"
    std::string quantity;
    cdouble value;
    double abs_err = 0.0;
    double tolerance = 0.0;
    bool pass = true;
};

struct Summary {
    std::int64_t pass_count = 0;
    std::int64_t fail_count = 0;
    double max_abs_err = 0.0;
    std::int64_t wall_time_ms = 0;
    std::uint64_t seed = 0;
};

// Canonical ordering: byte-identical output for identical configs.
void sort_rows(std::vector<Row>& rows);

std::string format_double(double v);
std::string rows_to_csv(const std::vector<Row>& rows);
std::string rows_to_json(const std::vector<Row>& rows);
std::string summary_to_json(const std::string& experiment, const Summary& s);

// Writes via a temp file in the target directory plus an atomic rename, so
// a failed run leaves no partial output behind.
void atomic_write(const std::string& path, const std::string& content);

Summary summarize(const std::vector<Row>& rows);

}  // namespace hff::cli

#endif
