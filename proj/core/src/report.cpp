#include "bergstab/report.hpp"

#include <charconv>
#include <cmath>

namespace bergstab {

namespace {

std::string format_general(double v, int precision) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general,
                                 precision);
    return std::string(buf, p);
}

const char* policy_name(ClosurePolicy p) {
    switch (p) {
        case ClosurePolicy::raw_ball: return "raw_ball";
        case ClosurePolicy::inversion_closed: return "inversion_closed";
        case ClosurePolicy::right_coset_closed: return "right_coset_closed";
    }
    return "unknown";
}

} // namespace

std::string format_full(double v) { return format_general(v, 17); }

std::string format_short(double v) { return format_general(v, 6); }

std::string format_index(const TowerIndex& idx) {
    return idx ? std::to_string(*idx) : "inf";
}

namespace {

void write_header_comment(const TowerReport& r, std::ostream& out, const char* prefix) {
    out << prefix << " config_hash=" << r.config_hash << "\n";
    out << prefix << " max_len=" << r.max_len << " tol=" << format_full(r.tol)
        << " policy=" << policy_name(r.policy) << "\n";
    out << prefix << " grid=" << r.grid.count << "x" << r.grid.count
        << " extent=" << format_full(r.grid.extent) << " basepoint="
        << format_full(r.basepoint.real()) << "," << format_full(r.basepoint.imag())
        << " top=" << r.top_label << "\n";
}

} // namespace

void write_tower_csv(const TowerReport& r, std::ostream& out) {
    write_header_comment(r, out, "#");
    out << "j,index,tau,tau_certified,sup_grid_error,ej_bound,hyp_norm_deviation,tail,"
           "terms_used\n";
    for (const TowerReportRow& row : r.rows) {
        out << row.j << "," << format_index(row.index) << "," << format_full(row.tau) << ","
            << (row.tau_certified ? 1 : 0) << "," << format_full(row.sup_grid_error) << ","
            << format_full(row.ej_bound) << "," << format_full(row.hyp_norm_deviation) << ","
            << format_full(row.tail) << "," << row.terms_used << "\n";
    }
}

void write_tower_record(const TowerReport& r, std::ostream& out) {
    out << "tower_report\n";
    write_header_comment(r, out, " meta");
    for (const TowerReportRow& row : r.rows) {
        out << "level " << row.j << "\n";
        out << "  index " << format_index(row.index) << "\n";
        out << "  tau " << format_full(row.tau) << "\n";
        out << "  tau_certified " << (row.tau_certified ? "true" : "false") << "\n";
        out << "  sup_grid_error " << format_full(row.sup_grid_error) << "\n";
        out << "  ej_bound " << format_full(row.ej_bound) << "\n";
        out << "  hyp_norm_deviation " << format_full(row.hyp_norm_deviation) << "\n";
        out << "  tail " << format_full(row.tail) << "\n";
        out << "  terms_used " << row.terms_used << "\n";
        out << "end\n";
    }
}

} // namespace bergstab
