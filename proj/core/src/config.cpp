#include "bergstab/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "bergstab/errors.hpp"

namespace bergstab {

std::vector<Complex> GridSpec::first_axis() const {
    std::vector<Complex> pts;
    for (int i = 0; i < count; ++i) {
        double t = count == 1 ? 0.0 : -extent + 2.0 * extent * i / (count - 1);
        pts.emplace_back(t, 0.0);
    }
    return pts;
}

std::vector<Complex> GridSpec::second_axis() const {
    std::vector<Complex> pts;
    for (int i = 0; i < count; ++i) {
        double t = count == 1 ? 0.0 : -extent + 2.0 * extent * i / (count - 1);
        pts.emplace_back(0.0, t);
    }
    return pts;
}

std::string fnv1a_hex(const std::string& bytes) {
    unsigned long long h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = digits[h & 0xf];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

namespace {

using Section = std::map<std::string, std::string>;
using Sections = std::map<std::string, Section>;

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Sections parse_sections(const std::string& text, const std::string& where) {
    Sections out;
    std::string section;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(where + ":" + std::to_string(lineno) +
                                  ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError(where + ":" + std::to_string(lineno) + ": empty section name");
            out[section];
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(where + ":" + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'");
        if (section.empty())
            throw ConfigError(where + ":" + std::to_string(lineno) +
                              ": key outside any [section]");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(where + ":" + std::to_string(lineno) + ": empty key");
        if (!out[section].emplace(key, val).second)
            throw ConfigError(where + ": duplicate key '" + key + "' in [" + section + "]");
    }
    return out;
}

double parse_double(const std::string& v, const std::string& what) {
    double d;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), d);
    if (ec != std::errc{} || p != v.data() + v.size())
        throw ConfigError(what + ": expected a real number, got '" + v + "'");
    return d;
}

long long parse_int(const std::string& v, const std::string& what) {
    long long n;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    if (ec != std::errc{} || p != v.data() + v.size())
        throw ConfigError(what + ": expected an integer, got '" + v + "'");
    return n;
}

bool parse_bool(const std::string& v, const std::string& what) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw ConfigError(what + ": expected true or false, got '" + v + "'");
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : v) {
        if (c == ',') {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

Complex parse_complex(const std::string& v, const std::string& what) {
    auto parts = split_list(v);
    if (parts.size() != 2)
        throw ConfigError(what + ": expected 're,im', got '" + v + "'");
    return {parse_double(parts[0], what), parse_double(parts[1], what)};
}

void check_keys(const Section& sec, const std::set<std::string>& allowed,
                const std::string& name) {
    for (const auto& [k, v] : sec)
        if (!allowed.count(k))
            throw ConfigError("unknown key '" + k + "' in [" + name + "]");
}

const Section* find_section(const Sections& all, const std::string& name) {
    auto it = all.find(name);
    return it == all.end() ? nullptr : &it->second;
}

std::string get_required(const Section& sec, const std::string& key, const std::string& name) {
    auto it = sec.find(key);
    if (it == sec.end())
        throw ConfigError("missing required key '" + key + "' in [" + name + "]");
    return it->second;
}

} // namespace

ExperimentConfig parse_config(const std::string& text, const std::string& where) {
    Sections all = parse_sections(text, where);
    for (const auto& [name, sec] : all) {
        if (name != "group" && name != "tower" && name != "grid" && name != "series" &&
            name != "output")
            throw ConfigError("unknown section [" + name + "] in " + where);
    }

    ExperimentConfig cfg;
    cfg.source_path = where;
    cfg.config_hash = fnv1a_hex(text);

    const Section* group = find_section(all, "group");
    if (!group) throw ConfigError("missing required section [group] in " + where);
    {
        std::set<std::string> allowed{"model", "rank", "asserted_free_discrete",
                                      "asserted_convergence_type", "provenance"};
        std::string model_s = get_required(*group, "model", "group");
        if (model_s == "disc")
            cfg.group.model = Model::disc;
        else if (model_s == "halfplane")
            cfg.group.model = Model::halfplane;
        else
            throw ConfigError("group model must be 'disc' or 'halfplane', got '" + model_s + "'");

        long long rank = parse_int(get_required(*group, "rank", "group"), "group.rank");
        if (rank < 1 || rank > 64) throw ConfigError("group rank must be in [1, 64]");
        for (long long i = 0; i < rank; ++i) {
            std::string key = "gen" + std::to_string(i);
            allowed.insert(key);
            auto parts = split_list(get_required(*group, key, "group"));
            if (parts.size() != 8)
                throw ConfigError("group." + key +
                                  ": expected 8 reals (a,b,c,d as re,im pairs)");
            double v[8];
            for (int k = 0; k < 8; ++k) v[k] = parse_double(parts[k], "group." + key);
            cfg.group.generators.push_back(
                MoebiusMap::create({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]},
                                   cfg.group.model));
        }
        check_keys(*group, allowed, "group");
        if (auto it = group->find("asserted_free_discrete"); it != group->end())
            cfg.group.asserted_free_discrete = parse_bool(it->second, "asserted_free_discrete");
        if (auto it = group->find("asserted_convergence_type"); it != group->end())
            cfg.group.asserted_convergence_type =
                parse_bool(it->second, "asserted_convergence_type");
        if (auto it = group->find("provenance"); it != group->end())
            cfg.bundled = it->second == "bundled";
        cfg.group.validate();
    }

    if (const Section* tower = find_section(all, "tower")) {
        check_keys(*tower, {"kind", "schedule", "top"}, "tower");
        TowerSpec t;
        std::string kind = get_required(*tower, "kind", "tower");
        if (kind == "cyclic_powers")
            t.kind = TowerKind::cyclic_powers;
        else if (kind == "abelian_mod")
            t.kind = TowerKind::abelian_mod;
        else
            throw ConfigError("tower kind must be 'cyclic_powers' or 'abelian_mod'");
        for (const std::string& s : split_list(get_required(*tower, "schedule", "tower")))
            t.schedule.push_back(parse_int(s, "tower.schedule"));
        std::string top = "trivial";
        if (auto it = tower->find("top"); it != tower->end()) top = it->second;
        if (top == "trivial")
            t.top = TowerTop::trivial;
        else if (top == "commutator")
            t.top = TowerTop::commutator;
        else
            throw ConfigError("tower top must be 'trivial' or 'commutator'");
        t.validate(cfg.group.rank());
        cfg.tower = t;
    }

    if (const Section* grid = find_section(all, "grid")) {
        check_keys(*grid, {"count", "extent"}, "grid");
        if (auto it = grid->find("count"); it != grid->end()) {
            long long c = parse_int(it->second, "grid.count");
            if (c < 1 || c > 64) throw ConfigError("grid.count must be in [1, 64]");
            cfg.grid.count = static_cast<int>(c);
        }
        if (auto it = grid->find("extent"); it != grid->end()) {
            cfg.grid.extent = parse_double(it->second, "grid.extent");
            if (!(cfg.grid.extent > 0.0 && cfg.grid.extent < 1.0))
                throw ConfigError("grid.extent must be in (0, 1)");
        }
    }

    if (const Section* series = find_section(all, "series")) {
        check_keys(*series, {"max_len", "tol", "policy", "level", "cap"}, "series");
        if (auto it = series->find("max_len"); it != series->end()) {
            long long m = parse_int(it->second, "series.max_len");
            if (m < 0 || m > 1000000) throw ConfigError("series.max_len out of range");
            cfg.series.max_len = static_cast<int>(m);
        }
        if (auto it = series->find("tol"); it != series->end()) {
            cfg.series.tol = parse_double(it->second, "series.tol");
            if (!(cfg.series.tol > 0.0)) throw ConfigError("series.tol must be > 0");
        }
        if (auto it = series->find("policy"); it != series->end()) {
            if (it->second == "raw_ball")
                cfg.series.policy = ClosurePolicy::raw_ball;
            else if (it->second == "inversion_closed")
                cfg.series.policy = ClosurePolicy::inversion_closed;
            else
                throw ConfigError("series.policy must be raw_ball or inversion_closed");
        }
        if (auto it = series->find("cap"); it != series->end()) {
            long long c = parse_int(it->second, "series.cap");
            if (c < 1) throw ConfigError("series.cap must be positive");
            cfg.series.cap = static_cast<std::size_t>(c);
        }
        if (auto it = series->find("level"); it != series->end()) cfg.level = it->second;
    }

    if (const Section* output = find_section(all, "output")) {
        check_keys(*output, {"basepoint"}, "output");
        if (auto it = output->find("basepoint"); it != output->end())
            cfg.basepoint = parse_complex(it->second, "output.basepoint");
    }

    if (cfg.level != "base" && cfg.level != "top") {
        long long j = parse_int(cfg.level, "series.level");
        if (!cfg.tower)
            throw ConfigError("series.level refers to a tower level but [tower] is missing");
        if (j < 1 || j > cfg.tower->levels())
            throw ConfigError("series.level out of range");
    }
    if (cfg.level == "top" && !cfg.tower)
        throw ConfigError("series.level = top requires a [tower] section");

    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

MembershipPredicate predicate_for_level(const ExperimentConfig& cfg, const std::string& level) {
    if (level == "base") return full_group_predicate();
    if (!cfg.tower)
        throw ConfigError("level '" + level + "' requires a [tower] section");
    if (level == "top") return top_predicate(*cfg.tower, cfg.group.rank());
    long long j = parse_int(level, "level");
    return level_predicate(*cfg.tower, static_cast<int>(j), cfg.group.rank());
}

} // namespace bergstab
