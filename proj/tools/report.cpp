#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <tuple>

namespace hff::cli {

void sort_rows(std::vector<Row>& rows) {
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.experiment, a.H, a.Hprime, a.mode, a.param, a.quantity) <
               std::tie(b.experiment, b.H, b.Hprime, b.mode, b.param, b.quantity);
    });
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string rows_to_csv(const std::vector<Row>& rows) {
    std::string out = "experiment,H,Hprime,mode,param,quantity,re,im,abs_err,tolerance,pass\n";
    for (const Row& r : rows) {
        out += r.experiment + ',' + std::to_string(r.H) + ',' + std::to_string(r.Hprime) + ',' +
               r.mode + ',' + r.param + ',' + r.quantity + ',' + format_double(r.value.real()) +
               ',' + format_double(r.value.imag()) + ',' + format_double(r.abs_err) + ',' +
               format_double(r.tolerance) + ',' + (r.pass ? "1" : "0") + '\n';
    }
    return out;
}

std::string rows_to_json(const std::vector<Row>& rows) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& r = rows[i];
        out += "  {\"experiment\":\"" + r.experiment + "\",\"H\":" + std::to_string(r.H) +
               ",\"Hprime\":" + std::to_string(r.Hprime) + ",\"mode\":\"" + r.mode +
               "\",\"param\":\"" + r.param + "\",\"quantity\":\"" + r.quantity +
               "\",\"value\":{\"re\":" + format_double(r.value.real()) +
               ",\"im\":" + format_double(r.value.imag()) +
               "},\"abs_err\":" + format_double(r.abs_err) +
               ",\"tolerance\":" + format_double(r.tolerance) +
               ",\"pass\":" + (r.pass ? "true" : "false") + "}";
        out += i + 1 < rows.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

std::string summary_to_json(const std::string& experiment, const Summary& s) {
    std::string out = "{\n";
    out += "  \"experiment\": \"" + experiment + "\",\n";
    out += "  \"pass_count\": " + std::to_string(s.pass_count) + ",\n";
    out += "  \"fail_count\": " + std::to_string(s.fail_count) + ",\n";
    out += "  \"max_abs_err\": " + format_double(s.max_abs_err) + ",\n";
    out += "  \"wall_time_ms\": " + std::to_string(s.wall_time_ms) + ",\n";
    out += "  \"seed\": " + std::to_string(s.seed) + "\n";
    out += "}\n";
    return out;
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f << content;
        if (!f.good()) {
            f.close();
            fs::remove(tmp);
            throw std::runtime_error("failed writing " + tmp.string());
        }
    }
    fs::rename(tmp, target);
}

Summary summarize(const std::vector<Row>& rows) {
    Summary s;
    for (const Row& r : rows) {
        (r.pass ? s.pass_count : s.fail_count) += 1;
        s.max_abs_err = std::max(s.max_abs_err, r.abs_err);
    }
    return s;
}

}  // namespace hff::cli
