#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "antipower/antipower.hpp"
#include "antipower/classifier.hpp"
#include "antipower/construction.hpp"
#include "antipower/golden.hpp"

namespace antipower {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json to_json(const ViolatingPair& p) { return Json::array({p.first, p.second}); }

inline Json to_json(const AntipowerReport& r) {
    Json j;
    j["query"] = {{"index", r.query.index}, {"k", r.query.k}, {"block_length", r.query.block_length}};
    j["pass"] = r.is_antipower;
    j["violating_pair"] = r.violating_pair ? to_json(*r.violating_pair) : Json(nullptr);
    return j;
}

inline Json to_json(const GoldenNumber& x) {
    Json j;
    j["a"] = x.a.str();
    j["b"] = x.b.str();
    j["approx"] = approx(x);  // display only, never authoritative
    return j;
}

inline const char* to_string(Trivalent t) {
    switch (t) {
        case Trivalent::yes: return "yes";
        case Trivalent::no: return "no";
        default: return "unknown";
    }
}

inline Json to_json(const ClassificationVerdict& v) {
    Json j;
    j["prolongable"] = v.prolongable;
    Json reach = Json::array();
    for (Letter l : v.reachable) reach.push_back(l);
    j["reachable_letters"] = reach;
    j["injective_on_letters"] = v.injective_on_letters;
    j["uniformly_recurrent"] = to_string(v.uniformly_recurrent);
    Json p;
    switch (v.periodicity.kind) {
        case PeriodicityVerdict::Kind::periodic: p["kind"] = "periodic"; break;
        case PeriodicityVerdict::Kind::aperiodic: p["kind"] = "aperiodic"; break;
        default: p["kind"] = "unknown"; break;
    }
    p["unit"] = v.periodicity.unit ? Json(v.periodicity.unit->display()) : Json(nullptr);
    j["periodicity"] = p;
    return j;
}

inline Json to_json(const ResidueScanReport& r) {
    Json j;
    j["r"] = r.r;
    j["n"] = r.n;
    j["r_pow_n"] = r.r_pow_n;
    j["letters_in_word"] = r.letters_in_word;
    j["prefix_length"] = r.prefix_length;
    j["pattern_length"] = r.pattern_length;
    j["occurrence_count"] = r.occurrences.size();
    j["residues"] = r.residues;
    j["violations"] = r.violations;
    j["vacuous"] = r.vacuous;
    j["found_any"] = r.found_any;
    j["pass"] = r.violations.empty();
    return j;
}

inline Json to_json(const UniformPlan& p) {
    Json j;
    j["parameters"] = {{"r", p.r}, {"m", p.m},       {"n", p.n},
                       {"y", p.y}, {"k", p.k},       {"r_pow_n", p.r_pow_n},
                       {"block_size", p.block_size}, {"s", p.s.display()}};
    j["prefix_length"] = p.prefix_length;
    return j;
}

inline Json to_json(const SweepReport& r) {
    Json j;
    j["first_index"] = r.first_index;
    j["last_index"] = r.last_index;
    j["checked"] = r.checked;
    j["pass"] = r.pass();
    Json fails = Json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"index", f.index}, {"violating_pair", to_json(f.pair)}});
    j["failures"] = fails;
    return j;
}

inline Json to_json(const ShiftCertificate& c) {
    Json j;
    j["n"] = c.n;
    j["ell"] = c.ell.str();
    j["frac"] = to_json(c.frac_part);
    j["holds"] = c.holds;
    return j;
}

inline Json to_json(const LinearBound& b) {
    Json j;
    j["n"] = b.n;
    j["block"] = b.block.str();
    j["ratio_ok"] = b.ratio_ok;
    return j;
}

inline Json to_json(const EvenFibPrefixReport& r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["block"] = r.block;
    j["prefix_length"] = r.prefix_length;
    j["pass"] = r.pass;
    j["violating_pair"] = r.violating_pair ? to_json(*r.violating_pair) : Json(nullptr);
    return j;
}

inline Json to_json(const GammaRow& row) {
    Json j;
    j["index"] = row.index;
    j["k"] = row.k;
    j["gamma"] = row.found ? Json(row.gamma_value) : Json(nullptr);
    j["ratio"] = row.found ? Json(static_cast<double>(row.gamma_value) / row.k)
                           : Json(nullptr);  // display only
    j["upper_block"] = row.upper_block;
    j["lower_ok"] = row.lower_ok;
    j["upper_ok"] = row.upper_ok;
    return j;
}

// CSV for index sweeps: one row per index.
inline std::string sweep_csv(const SweepReport& r, std::uint32_t k, std::uint64_t block) {
    std::ostringstream out;
    out << "index,k,block_length,pass,violating_first,violating_second\n";
    std::size_t next_failure = 0;
    for (std::uint64_t i = r.first_index; r.checked > 0 && i <= r.last_index; ++i) {
        bool failed = next_failure < r.failures.size() && r.failures[next_failure].index == i;
        out << i << ',' << k << ',' << block << ',' << (failed ? "false" : "true");
        if (failed) {
            out << ',' << r.failures[next_failure].pair.first << ','
                << r.failures[next_failure].pair.second;
            ++next_failure;
        } else {
            out << ",,";
        }
        out << '\n';
    }
    return out.str();
}

inline std::string gamma_csv(const std::vector<GammaRow>& rows) {
    std::ostringstream out;
    out << "index,k,gamma,ratio,upper_block,lower_ok,upper_ok\n";
    for (const auto& row : rows) {
        out << row.index << ',' << row.k << ',';
        if (row.found)
            out << row.gamma_value << ',' << static_cast<double>(row.gamma_value) / row.k;
        else
            out << ',';
        out << ',' << row.upper_block << ',' << (row.lower_ok ? "true" : "false") << ','
            << (row.upper_ok ? "true" : "false") << '\n';
    }
    return out.str();
}

// Reports are written atomically: temp file in the same directory, then rename.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        out << contents;
        if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace antipower
