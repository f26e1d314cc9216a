#include "fracdim/spec_io.hpp"

#include "fracdim/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

namespace fracdim {

namespace {

std::string strip_spaces(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// key=value pairs with comments removed; keys lowercased and despaced.
std::vector<std::pair<std::string, std::string>> key_value_lines(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::size_t pos = 0;
    int lineno = 0;
    while (pos <= text.size()) {
        ++lineno;
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (trim(line).empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = strip_spaces(line.substr(0, eq));
        std::transform(key.begin(), key.end(), key.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (key.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty key");
        out.emplace_back(std::move(key), trim(line.substr(eq + 1)));
    }
    return out;
}

ScheduleSpec parse_schedule(const std::string& raw) {
    const std::string value = strip_spaces(raw);
    if (value.rfind("recurrence", 0) == 0) {
        std::string rest = value.substr(10);
        if (rest.rfind("k0=", 0) != 0)
            throw ParseError("schedule recurrence expects k0=<int>, got \"" + raw + "\"");
        return ScheduleSpec::recurrence(parse_bigint(rest.substr(3)));
    }
    if (value.rfind("explicit", 0) == 0) {
        std::string rest = value.substr(8);
        std::vector<BigInt> ks;
        std::size_t start = 0;
        while (start <= rest.size()) {
            std::size_t comma = rest.find(',', start);
            std::string item = rest.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            ks.push_back(parse_bigint(item));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (ks.size() < 2) throw ParseError("explicit schedule needs at least k_0,k_1");
        return ScheduleSpec::explicit_list(std::move(ks));
    }
    throw ParseError("schedule must be \"recurrence k0=<int>\" or \"explicit <list>\", got \"" +
                     raw + "\"");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

std::string directory_of(const std::string& path) {
    std::size_t slash = path.find_last_of('/');
    return slash == std::string::npos ? std::string() : path.substr(0, slash + 1);
}

}  // namespace

DigitSetSpec parse_spec_text(std::string_view text) {
    DigitSetSpec spec;
    bool have_schedule = false, have_a1 = false, have_a2 = false;
    for (const auto& [key, value] : key_value_lines(text)) {
        if (key == "schedule") {
            if (have_schedule) throw ParseError("duplicate key schedule");
            spec.schedule = parse_schedule(value);
            have_schedule = true;
        } else if (key == "a1") {
            if (have_a1) throw ParseError("duplicate key a1");
            spec.a1 = parse_rational(value);
            have_a1 = true;
        } else if (key == "a2") {
            if (have_a2) throw ParseError("duplicate key a2");
            spec.a2 = parse_rational(value);
            have_a2 = true;
        } else {
            throw ParseError("unknown key \"" + key + "\"");
        }
    }
    if (!have_schedule || !have_a1 || !have_a2)
        throw ParseError("spec needs schedule, a1 and a2");
    return spec;
}

DigitSetSpec load_spec_file(const std::string& path) {
    return parse_spec_text(slurp(path));
}

ProductConfig parse_product_config(std::string_view text) {
    ProductConfig config;
    bool have_power = false;
    for (const auto& [key, value] : key_value_lines(text)) {
        if (key == "factor") {
            if (value.empty()) throw ParseError("factor path is empty");
            config.factor_paths.push_back(value);
        } else if (key == "power") {
            if (have_power) throw ParseError("duplicate key power");
            const BigInt p = parse_bigint(value);
            if (p < 1 || p > 64) throw ParseError("power must be in 1..64");
            config.power = p.convert_to<int>();
            have_power = true;
        } else {
            throw ParseError("unknown key \"" + key + "\"");
        }
    }
    if (config.factor_paths.empty()) throw ParseError("product config lists no factors");
    return config;
}

ProductConfig load_product_file(const std::string& path) {
    ProductConfig config = parse_product_config(slurp(path));
    const std::string dir = directory_of(path);
    for (std::string& factor : config.factor_paths)
        if (!factor.empty() && factor.front() != '/') factor = dir + factor;
    return config;
}

std::string format_rational(const Rational& r) {
    std::string s = numer(r).str();
    if (denom(r) != 1) s += "/" + denom(r).str();
    return s;
}

void write_density_csv(std::ostream& out, const std::vector<DensityEntry>& entries) {
    out << "k,count,density_num,density_den,density_float\n";
    for (const DensityEntry& e : entries)
        out << e.k << ',' << e.count << ',' << numer(e.d) << ',' << denom(e.d) << ','
            << decimal12(e.d) << '\n';
}

void write_checkpoint_csv(std::ostream& out, const std::vector<CheckpointDensity>& rows) {
    out << "k,count,density_num,density_den,density_float\n";
    for (const CheckpointDensity& r : rows)
        out << r.k << ',' << r.count << ',' << numer(r.d) << ',' << denom(r.d) << ','
            << decimal12(r.d) << '\n';
}

void write_covering_csv(std::ostream& out, const CoveringProfile& profile) {
    out << "k,exponent,quotient_num,quotient_den,quotient_float\n";
    for (const CoveringEntry& e : profile.entries)
        out << e.k << ',' << e.exponent << ',' << numer(e.quotient) << ',' << denom(e.quotient)
            << ',' << decimal12(e.quotient) << '\n';
}

void write_points_csv(std::ostream& out, const PointCloud& cloud) {
    for (int i = 1; i <= cloud.d; ++i) out << (i > 1 ? "," : "") << 'x' << i;
    out << '\n';
    const std::string denominator = "/2^" + std::to_string(cloud.K);
    for (const auto& point : cloud.points) {
        for (std::size_t i = 0; i < point.size(); ++i)
            out << (i > 0 ? "," : "") << point[i] << denominator;
        out << '\n';
    }
}

void write_boxcount_csv(std::ostream& out, const CrosscheckReport& report) {
    out << "k,empirical,analytic_exponent,match\n";
    for (const CrosscheckRow& row : report.rows)
        out << row.k << ',' << row.empirical << ',' << row.exponent << ','
            << (row.ok ? "yes" : "no") << '\n';
}

}  // namespace fracdim
