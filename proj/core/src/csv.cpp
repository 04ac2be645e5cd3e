#include "gme/closedform.hpp"
#include "gme/error.hpp"
#include "gme/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <system_error>

namespace gme::sweep {

namespace {

std::string format_theta(double theta) {
    char buf[32];
    const int len = std::snprintf(buf, sizeof buf, "%.12g", theta);
    return std::string(buf, static_cast<std::size_t>(len));
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if(!out) throw IoError(path, "cannot open for writing");
    out << content;
    out.flush();
    if(!out) throw IoError(path, "write failed");
}

// gnuplot single-quoted string.
std::string quoted(const std::string &s) {
    std::string out = "'";
    for(char ch : s) {
        if(ch == '\'') out += "''";
        else out += ch;
    }
    return out + "'";
}

} // namespace

std::string format_number(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    if(res.ec != std::errc{}) return "nan";
    return std::string(buf, res.ptr);
}

std::string to_csv(std::span<const SweepRow> rows) {
    std::string out = "family,theta,gbc,gmc,ggm,fill\n";
    for(const auto &row : rows) {
        out += to_string(row.family);
        out += ',';
        out += format_theta(row.theta);
        for(auto m : kAllMeasures) {
            out += ',';
            if(row[m]) out += format_number(*row[m]);
        }
        out += '\n';
    }
    return out;
}

void emit_csv(std::span<const SweepRow> rows, const std::string &path) { write_file(path, to_csv(rows)); }

std::string to_plotscript(std::span<const SweepRow> rows, const std::string &csv_path) {
    std::string family = rows.empty() ? "?" : std::string(to_string(rows.front().family));
    std::string out;
    out += "# gnuplot script; run with: gnuplot <this file>\n";
    out += "set datafile separator ','\n";
    out += "set datafile missing ''\n";
    out += "set terminal png size 900,600\n";
    out += "set output " + quoted(csv_path + ".png") + "\n";
    out += "set title " + quoted("family " + family) + "\n";
    out += "set xlabel 'theta (rad)'\n";
    out += "set ylabel 'measure'\n";
    out += "set key outside right\n";
    out += "set grid\n";
    if(!rows.empty())
        out += "set xrange [" + format_number(rows.front().theta) + ":" + format_number(rows.back().theta) + "]\n";
    out += "set yrange [0:1.05]\n";

    std::string plots;
    for(std::size_t k = 0; k < kAllMeasures.size(); ++k) {
        const auto m = kAllMeasures[k];
        const bool present = std::any_of(rows.begin(), rows.end(), [&](const SweepRow &r) { return r[m].has_value(); });
        if(!present) continue;
        if(!plots.empty()) plots += ", \\\n     ";
        plots += (plots.empty() ? quoted(csv_path) : std::string("''")) + " using 2:" + std::to_string(k + 3) +
                 " every ::1 with lines lw 2 title " + quoted(std::string(to_string(m)));
    }
    if(!plots.empty()) out += "plot " + plots + "\n";
    return out;
}

void emit_plotscript(std::span<const SweepRow> rows, const std::string &csv_path, const std::string &path) {
    write_file(path, to_plotscript(rows, csv_path));
}

std::string closed_form_csv(int n_max) {
    // Validates the range before producing anything.
    (void) closed_form::gbc_ghz(n_max);
    std::string out = "n,gbc_ghz,gbc_w,ratio\n";
    for(int n = 2; n <= n_max; ++n) {
        out += std::to_string(n) + ',' + format_number(closed_form::gbc_ghz(n).gbc) + ',' +
               format_number(closed_form::gbc_w(n).gbc) + ',' + format_number(closed_form::ratio_w_over_ghz(n)) + '\n';
    }
    return out;
}

void emit_closed_form_csv(int n_max, const std::string &path) { write_file(path, closed_form_csv(n_max)); }

} // namespace gme::sweep
