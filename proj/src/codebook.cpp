#include "molop/codebook.hpp"

#include "molop/errors.hpp"
#include "molop/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

namespace molop {

using ordered_json = nlohmann::ordered_json;

const Word* LinguisticVariable::find(const std::string& label) const {
    for (const auto& w : words)
        if (w.label == label)
            return &w;
    return nullptr;
}

int LinguisticVariable::ordinal(const std::string& label) const {
    for (std::size_t i = 0; i < words.size(); ++i)
        if (words[i].label == label)
            return static_cast<int>(i) + 1;
    return 0;
}

Codebook::Codebook(DomainScale scale, std::string provenance,
                   std::vector<LinguisticVariable> variables, double grid_step)
    : scale_(scale), provenance_(std::move(provenance)), variables_(std::move(variables)) {
    if (!(scale_.min < scale_.max))
        throw schema_error("codebook: scale.min must be < scale.max");
    const DomainGrid g(scale_, grid_step);
    std::set<std::string> var_names;
    for (const auto& var : variables_) {
        if (!var_names.insert(var.name).second)
            throw schema_error("codebook: duplicate variable '" + var.name + "'");
        if (var.words.size() < 2)
            throw schema_error("codebook: variable '" + var.name + "' needs at least 2 words");
        std::set<std::string> labels;
        for (const auto& w : var.words) {
            if (!labels.insert(w.label).second)
                throw schema_error("codebook: duplicate label '" + w.label + "' in variable '" +
                                   var.name + "'");
            if (auto r = validate_fou(w.fou, g); !r)
                throw schema_error("codebook: invalid FOU for " + var.name + "." + w.label + ": " +
                                   r.message);
        }
    }
}

bool Codebook::has_variable(const std::string& name) const {
    for (const auto& v : variables_)
        if (v.name == name)
            return true;
    return false;
}

const LinguisticVariable& Codebook::variable(const std::string& name) const {
    for (const auto& v : variables_)
        if (v.name == name)
            return v;
    throw binding_error("codebook '" + provenance_ + "': unknown variable '" + name + "'");
}

const Word& Codebook::word(const std::string& variable_name, const std::string& label) const {
    const auto& var = variable(variable_name);
    if (const Word* w = var.find(label))
        return *w;
    throw binding_error("codebook '" + provenance_ + "': unknown label '" + label +
                        "' in variable '" + variable_name + "'");
}

namespace {

ordered_json mf_to_json(const TrapezoidMF& mf, bool with_height) {
    if (!with_height)
        return ordered_json::array({mf.a, mf.b, mf.c, mf.d});
    ordered_json j;
    j["points"] = ordered_json::array({mf.a, mf.b, mf.c, mf.d});
    j["height"] = mf.h;
    return j;
}

TrapezoidMF mf_from_points(const ordered_json& pts, double h, const std::string& ctx) {
    if (!pts.is_array() || pts.size() != 4)
        throw schema_error(ctx + ": expected 4 corner values");
    TrapezoidMF mf;
    mf.a = pts[0].get<double>();
    mf.b = pts[1].get<double>();
    mf.c = pts[2].get<double>();
    mf.d = pts[3].get<double>();
    mf.h = h;
    return mf;
}

ordered_json read_json_file(const std::filesystem::path& file, const char* what) {
    std::ifstream in(file);
    if (!in)
        throw io_error(std::string(what) + " not found: " + file.string());
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw schema_error(std::string(what) + " " + file.string() + ": " + e.what());
    }
    return j;
}

void write_text_atomic(const std::filesystem::path& file, const std::string& text) {
    const std::filesystem::path tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out)
            throw io_error("cannot write file: " + tmp.string());
        out << text;
    }
    std::filesystem::rename(tmp, file);
}

} // namespace

Codebook Codebook::load(const std::filesystem::path& file, double grid_step) {
    const ordered_json j = read_json_file(file, "codebook");
    try {
        DomainScale scale{j.at("scale").at("min").get<double>(), j.at("scale").at("max").get<double>()};
        std::string provenance = j.value("provenance", "");
        std::vector<LinguisticVariable> vars;
        for (const auto& jv : j.at("variables")) {
            LinguisticVariable var;
            var.name = jv.at("name").get<std::string>();
            for (const auto& jw : jv.at("words")) {
                Word w;
                w.label = jw.at("label").get<std::string>();
                w.long_name = jw.value("long_name", w.label);
                const std::string ctx = var.name + "." + w.label;
                w.fou.umf = mf_from_points(jw.at("umf"), 1.0, ctx + ".umf");
                const auto& jl = jw.at("lmf");
                w.fou.lmf = mf_from_points(jl.at("points"), jl.at("height").get<double>(), ctx + ".lmf");
                var.words.push_back(std::move(w));
            }
            vars.push_back(std::move(var));
        }
        return Codebook(scale, std::move(provenance), std::move(vars), grid_step);
    } catch (const nlohmann::json::exception& e) {
        throw schema_error("codebook " + file.string() + ": " + e.what());
    }
}

void Codebook::save(const std::filesystem::path& file) const {
    ordered_json j;
    j["scale"] = {{"min", scale_.min}, {"max", scale_.max}};
    j["provenance"] = provenance_;
    j["variables"] = ordered_json::array();
    for (const auto& var : variables_) {
        ordered_json jv;
        jv["name"] = var.name;
        jv["words"] = ordered_json::array();
        for (const auto& w : var.words) {
            ordered_json jw;
            jw["label"] = w.label;
            jw["long_name"] = w.long_name;
            jw["umf"] = mf_to_json(w.fou.umf, false);
            jw["lmf"] = mf_to_json(w.fou.lmf, true);
            jv["words"].push_back(std::move(jw));
        }
        j["variables"].push_back(std::move(jv));
    }
    write_text_atomic(file, j.dump(2) + "\n");
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.push_back("");
    return cells;
}

} // namespace

Codebook Codebook::import_csv(const std::filesystem::path& file, DomainScale scale,
                              std::string provenance, double grid_step, double centroid_check_tol) {
    std::ifstream in(file);
    if (!in)
        throw io_error("codebook csv not found: " + file.string());
    const DomainGrid g(scale, grid_step);
    std::string line;
    std::vector<LinguisticVariable> vars;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#')
            continue;
        if (line_no == 1 && line.rfind("variable,", 0) == 0)
            continue; // header
        const auto cells = split_csv_line(line);
        if (cells.size() != 15)
            throw schema_error(file.string() + ":" + std::to_string(line_no) +
                               ": expected 15 columns, got " + std::to_string(cells.size()));
        Word w;
        const std::string var_name = cells[0];
        w.label = cells[1];
        w.long_name = cells[2];
        double v[12];
        try {
            for (int i = 0; i < 12; ++i)
                v[i] = std::stod(cells[3 + i]);
        } catch (const std::exception&) {
            throw schema_error(file.string() + ":" + std::to_string(line_no) +
                               ": non-numeric cell in row for " + var_name + "." + w.label);
        }
        w.fou.umf = {v[0], v[1], v[2], v[3], 1.0};
        w.fou.lmf = {v[4], v[5], v[6], v[7], v[8]};
        // centroid columns are read-only cross-checks
        const CentroidInterval c = centroid_ekm(w.fou, g);
        if (std::abs(c.left - v[9]) > centroid_check_tol || std::abs(c.right - v[10]) > centroid_check_tol ||
            std::abs(c.mean() - v[11]) > centroid_check_tol) {
            std::ostringstream os;
            os << file.string() << ":" << line_no << ": centroid cross-check failed for " << var_name
               << "." << w.label << ": stored [" << v[9] << ", " << v[10] << ", " << v[11]
               << "] vs computed [" << c.left << ", " << c.right << ", " << c.mean() << "]";
            throw schema_error(os.str());
        }
        auto it = std::find_if(vars.begin(), vars.end(),
                               [&](const LinguisticVariable& lv) { return lv.name == var_name; });
        if (it == vars.end()) {
            vars.push_back(LinguisticVariable{var_name, {}});
            it = std::prev(vars.end());
        }
        it->words.push_back(std::move(w));
    }
    return Codebook(scale, std::move(provenance), std::move(vars), grid_step);
}

void Codebook::export_csv(const std::filesystem::path& file, double grid_step) const {
    const DomainGrid g(scale_, grid_step);
    std::ostringstream os;
    os << "variable,label,long_name,umf_a,umf_b,umf_c,umf_d,lmf_a,lmf_b,lmf_c,lmf_d,lmf_h,"
          "centroid_left,centroid_right,centroid_mean\n";
    os << std::fixed << std::setprecision(6);
    for (const auto& var : variables_) {
        for (const auto& w : var.words) {
            const CentroidInterval c = centroid_ekm(w.fou, g);
            os << var.name << ',' << w.label << ',' << w.long_name << ',' << w.fou.umf.a << ','
               << w.fou.umf.b << ',' << w.fou.umf.c << ',' << w.fou.umf.d << ',' << w.fou.lmf.a << ','
               << w.fou.lmf.b << ',' << w.fou.lmf.c << ',' << w.fou.lmf.d << ',' << w.fou.lmf.h << ','
               << c.left << ',' << c.right << ',' << c.mean() << '\n';
        }
    }
    write_text_atomic(file, os.str());
}

std::vector<DataInterval> synthesize_person_intervals(const EndpointSpec& spec, int n,
                                                      std::uint64_t seed, const DomainScale& scale) {
    auto in_scale = [&](double lo, double hi) {
        return lo >= scale.min - 1e-12 && hi <= scale.max + 1e-12 && lo <= hi;
    };
    if (!in_scale(spec.left_lo, spec.left_hi) || !in_scale(spec.right_lo, spec.right_hi))
        throw invalid_argument("endpoint spec ranges must be ordered and within the scale");
    if (n < 1)
        throw invalid_argument("synthesize_person_intervals: n must be >= 1");

    Rng rng(seed);
    std::vector<double> lefts(n), rights(n);
    for (int i = 0; i < n; ++i)
        lefts[i] = rng.uniform(spec.left_lo, spec.left_hi);
    for (int i = 0; i < n; ++i)
        rights[i] = rng.uniform(spec.right_lo, spec.right_hi);

    std::vector<DataInterval> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        double l = lefts[i];
        double r = rights[i];
        int retries = 0;
        while (l > r) { // only reachable for overlapping spec ranges
            if (++retries > 1000)
                throw degenerate_error("synthesize_person_intervals: exceeded 1000 resamples for a pair");
            l = rng.uniform(spec.left_lo, spec.left_hi);
            r = rng.uniform(spec.right_lo, spec.right_hi);
        }
        out.push_back(DataInterval{l, r});
    }
    return out;
}

std::string to_string(EncoderMethod m) { return m == EncoderMethod::IA ? "IA" : "HMA"; }

std::optional<EncoderMethod> encoder_from_string(const std::string& s) {
    if (s == "IA" || s == "ia")
        return EncoderMethod::IA;
    if (s == "HMA" || s == "hma")
        return EncoderMethod::HMA;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Encoders
// ---------------------------------------------------------------------------

namespace {

double quantile(std::vector<double> v, double p) {
    std::sort(v.begin(), v.end());
    const double h = (static_cast<double>(v.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= v.size())
        return v.back();
    return v[lo] + (h - lo) * (v[lo + 1] - v[lo]);
}

double mean_of(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double stddev_of(const std::vector<double>& v, double mean) {
    if (v.size() < 2)
        return 0.0;
    double s = 0.0;
    for (double x : v)
        s += (x - mean) * (x - mean);
    return std::sqrt(s / (static_cast<double>(v.size()) - 1.0));
}

std::vector<double> lefts_of(const std::vector<DataInterval>& xs) {
    std::vector<double> v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        v[i] = xs[i].l;
    return v;
}

std::vector<double> rights_of(const std::vector<DataInterval>& xs) {
    std::vector<double> v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        v[i] = xs[i].r;
    return v;
}

std::vector<double> lengths_of(const std::vector<DataInterval>& xs) {
    std::vector<double> v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        v[i] = xs[i].r - xs[i].l;
    return v;
}

// Two-sided normal tolerance factor k(m, P=95%, conf=95%) by Howe's method,
// with the chi-square quantile from the Wilson-Hilferty approximation.
double tolerance_factor(std::size_t m) {
    if (m < 2)
        return 1e6;
    const double z_p = 1.959963984540054;   // z for (1+0.95)/2
    const double z_a = -1.6448536269514722; // z for alpha = 0.05
    const double k = static_cast<double>(m) - 1.0;
    const double t = 1.0 - 2.0 / (9.0 * k) + z_a * std::sqrt(2.0 / (9.0 * k));
    const double chi2 = k * t * t * t;
    return z_p * std::sqrt(k * (1.0 + 1.0 / static_cast<double>(m)) / chi2);
}

std::vector<DataInterval> box_whisker_pass(const std::vector<DataInterval>& data) {
    auto fences = [](const std::vector<double>& v) {
        const double q1 = quantile(v, 0.25);
        const double q3 = quantile(v, 0.75);
        const double iqr = q3 - q1;
        return std::pair<double, double>{q1 - 1.5 * iqr, q3 + 1.5 * iqr};
    };
    const auto [flo, fhi] = fences(lefts_of(data));
    const auto [glo, ghi] = fences(rights_of(data));
    std::vector<DataInterval> keep;
    for (const auto& d : data)
        if (d.l >= flo && d.l <= fhi && d.r >= glo && d.r <= ghi)
            keep.push_back(d);
    if (keep.empty())
        return keep;
    const auto [llo, lhi] = fences(lengths_of(keep));
    std::vector<DataInterval> keep2;
    for (const auto& d : keep)
        if (d.r - d.l >= llo && d.r - d.l <= lhi)
            keep2.push_back(d);
    return keep2;
}

std::vector<DataInterval> tolerance_pass(const std::vector<DataInterval>& data) {
    auto band_keep = [](const std::vector<DataInterval>& xs, auto accessor) {
        std::vector<double> v;
        v.reserve(xs.size());
        for (const auto& d : xs)
            v.push_back(accessor(d));
        const double m = mean_of(v);
        const double s = stddev_of(v, m);
        const double k = tolerance_factor(xs.size());
        std::vector<DataInterval> keep;
        for (const auto& d : xs)
            if (std::abs(accessor(d) - m) <= k * s + 1e-12)
                keep.push_back(d);
        return keep;
    };
    auto keep = band_keep(data, [](const DataInterval& d) { return d.l; });
    keep = band_keep(keep, [](const DataInterval& d) { return d.r; });
    keep = band_keep(keep, [](const DataInterval& d) { return d.r - d.l; });
    return keep;
}

std::vector<DataInterval> reasonable_interval_pass(const std::vector<DataInterval>& data) {
    const auto ls = lefts_of(data);
    const auto rs = rights_of(data);
    const double ml = mean_of(ls);
    const double mr = mean_of(rs);
    const double sl = stddev_of(ls, ml);
    const double sr = stddev_of(rs, mr);
    double xi;
    if (sl < 1e-12 && sr < 1e-12)
        xi = 0.5 * (ml + mr);
    else if (sl < 1e-12)
        xi = ml;
    else if (sr < 1e-12)
        xi = mr;
    else if (std::abs(sl - sr) < 1e-12)
        xi = 0.5 * (ml + mr);
    else {
        const double arg = (ml - mr) * (ml - mr) + 2.0 * (sl * sl - sr * sr) * std::log(sl / sr);
        const double root = sl * sr * std::sqrt(std::max(0.0, arg));
        const double den = sl * sl - sr * sr;
        const double x1 = ((mr * sl * sl - ml * sr * sr) + root) / den;
        const double x2 = ((mr * sl * sl - ml * sr * sr) - root) / den;
        const double lo = std::min(ml, mr);
        const double hi = std::max(ml, mr);
        if (x1 >= lo && x1 <= hi)
            xi = x1;
        else if (x2 >= lo && x2 <= hi)
            xi = x2;
        else
            xi = 0.5 * (ml + mr);
    }
    std::vector<DataInterval> keep;
    for (const auto& d : data)
        if (d.l <= xi + 1e-12 && d.r >= xi - 1e-12)
            keep.push_back(d);
    return keep;
}

FouShape classify_from_data(const std::vector<DataInterval>& data, const DomainScale& scale) {
    // Interior mapping spill test: if the variance-matched symmetric
    // triangles would on average poke past a domain end, the word is a
    // shoulder on that side.
    double lo_sum = 0.0, hi_sum = 0.0;
    for (const auto& d : data) {
        const double mu = 0.5 * (d.l + d.r);
        const double delta = (d.r - d.l) / std::numbers::sqrt2;
        lo_sum += mu - delta;
        hi_sum += mu + delta;
    }
    const double n = static_cast<double>(data.size());
    const double spill_left = scale.min - lo_sum / n;
    const double spill_right = hi_sum / n - scale.max;
    if (spill_left <= 0.0 && spill_right <= 0.0)
        return FouShape::Interior;
    return spill_left >= spill_right ? FouShape::LeftShoulder : FouShape::RightShoulder;
}

double clampd(double x, double lo, double hi) { return std::min(hi, std::max(lo, x)); }

IT2TrapezoidFOU ia_fs_part(const std::vector<DataInterval>& data, const DomainScale& scale) {
    const FouShape shape = classify_from_data(data, scale);
    const double s6 = std::sqrt(6.0);
    IT2TrapezoidFOU fou;
    if (shape == FouShape::LeftShoulder) {
        double pmin = 1e300, pmax = -1e300, qmin = 1e300, qmax = -1e300;
        for (const auto& d : data) {
            const double mu = 0.5 * (d.l + d.r);
            const double c = d.r - d.l;
            const double p = clampd(mu - c / s6, scale.min, scale.max);
            const double q = clampd(mu + s6 * c / 3.0, scale.min, scale.max);
            pmin = std::min(pmin, p); pmax = std::max(pmax, p);
            qmin = std::min(qmin, q); qmax = std::max(qmax, q);
        }
        fou.umf = {scale.min, scale.min, pmax, std::max(pmax, qmax), 1.0};
        fou.lmf = {scale.min, scale.min, pmin, std::max(pmin, qmin), 1.0};
    } else if (shape == FouShape::RightShoulder) {
        double pmin = 1e300, pmax = -1e300, qmin = 1e300, qmax = -1e300;
        for (const auto& d : data) {
            const double mu = 0.5 * (d.l + d.r);
            const double c = d.r - d.l;
            const double p = clampd(mu - s6 * c / 3.0, scale.min, scale.max);
            const double q = clampd(mu + c / s6, scale.min, scale.max);
            pmin = std::min(pmin, p); pmax = std::max(pmax, p);
            qmin = std::min(qmin, q); qmax = std::max(qmax, q);
        }
        fou.umf = {std::min(pmin, qmin), qmin, scale.max, scale.max, 1.0};
        fou.lmf = {std::min(pmax, qmax), qmax, scale.max, scale.max, 1.0};
    } else {
        double lo_min = 1e300, lo_max = -1e300, hi_min = 1e300, hi_max = -1e300;
        double mu_min = 1e300, mu_max = -1e300;
        for (const auto& d : data) {
            const double mu = 0.5 * (d.l + d.r);
            const double delta = (d.r - d.l) / std::numbers::sqrt2;
            const double lo = clampd(mu - delta, scale.min, scale.max);
            const double hi = clampd(mu + delta, scale.min, scale.max);
            lo_min = std::min(lo_min, lo); lo_max = std::max(lo_max, lo);
            hi_min = std::min(hi_min, hi); hi_max = std::max(hi_max, hi);
            mu_min = std::min(mu_min, mu); mu_max = std::max(mu_max, mu);
        }
        fou.umf = {lo_min, mu_min, mu_max, hi_max, 1.0};
        const double a = lo_max;
        const double b = hi_min;
        if (a >= b) {
            // embedded triangles have empty intersection; keep a thin spike
            const double m = 0.5 * (a + b);
            fou.lmf = {m, m, m, m, 0.001};
        } else if (mu_max <= a || mu_min >= b) {
            fou.lmf = {a, 0.5 * (a + b), 0.5 * (a + b), b, 1.0};
        } else {
            // apex of the lower envelope: rising edge (a,0)->(mu_max,1) meets
            // falling edge (b,0)->(mu_min,1)
            const double wl = mu_max - a;
            const double wr = b - mu_min;
            const double p = (a * wr + b * wl) / (wl + wr);
            const double h = clampd((p - a) / wl, 0.001, 1.0);
            fou.lmf = {a, p, p, b, h};
        }
    }
    return fou;
}

IT2TrapezoidFOU hma_fs_part(const std::vector<DataInterval>& data, const DomainScale& scale) {
    const FouShape shape = classify_from_data(data, scale);
    const auto ls = lefts_of(data);
    const auto rs = rights_of(data);
    const double ml = mean_of(ls);
    const double mr = mean_of(rs);
    const double sl = stddev_of(ls, ml);
    const double sr = stddev_of(rs, mr);
    double o_l = *std::max_element(ls.begin(), ls.end());
    double o_r = *std::min_element(rs.begin(), rs.end());
    if (o_l > o_r)
        o_l = o_r = 0.5 * (o_l + o_r); // no common overlap: collapse the core
    const double wide = 3.0 * std::numbers::sqrt3;
    const double tight = std::sqrt(6.0);

    IT2TrapezoidFOU fou;
    if (shape == FouShape::LeftShoulder) {
        fou.umf = {scale.min, scale.min, o_r, clampd(mr + wide * sr, o_r, scale.max), 1.0};
        fou.lmf = {scale.min, scale.min, o_r, clampd(mr + tight * sr, o_r, scale.max), 1.0};
    } else if (shape == FouShape::RightShoulder) {
        fou.umf = {clampd(ml - wide * sl, scale.min, o_l), o_l, scale.max, scale.max, 1.0};
        fou.lmf = {clampd(ml - tight * sl, scale.min, o_l), o_l, scale.max, scale.max, 1.0};
    } else {
        fou.umf = {clampd(ml - wide * sl, scale.min, o_l), o_l, o_r,
                   clampd(mr + wide * sr, o_r, scale.max), 1.0};
        fou.lmf = {clampd(ml - tight * sl, scale.min, o_l), o_l, o_r,
                   clampd(mr + tight * sr, o_r, scale.max), 1.0};
    }
    return fou;
}

} // namespace

IT2TrapezoidFOU encode_word(std::span<const DataInterval> intervals, EncoderMethod method,
                            const DomainScale& scale) {
    std::vector<DataInterval> data;
    data.reserve(intervals.size());
    for (const auto& d : intervals)
        if (!std::isnan(d.l) && !std::isnan(d.r) && d.l >= scale.min && d.r <= scale.max && d.l < d.r)
            data.push_back(d);
    if (data.empty())
        throw degenerate_error("encode_word: all intervals rejected as bad data");

    data = box_whisker_pass(data);
    if (method == EncoderMethod::IA && !data.empty()) {
        data = tolerance_pass(data);
        if (!data.empty())
            data = reasonable_interval_pass(data);
    }
    if (data.empty())
        throw degenerate_error("encode_word: all intervals rejected during preprocessing");
    if (data.size() < 10)
        throw degenerate_error("encode_word: only " + std::to_string(data.size()) +
                               " intervals survive preprocessing (need at least 10)");

    return method == EncoderMethod::IA ? ia_fs_part(data, scale) : hma_fs_part(data, scale);
}

EndpointDocument EndpointDocument::load(const std::filesystem::path& file) {
    const ordered_json j = read_json_file(file, "endpoint document");
    try {
        EndpointDocument doc;
        doc.scale = {j.at("scale").at("min").get<double>(), j.at("scale").at("max").get<double>()};
        doc.provenance = j.value("provenance", "");
        for (const auto& jv : j.at("variables")) {
            EndpointVariable var;
            var.name = jv.at("name").get<std::string>();
            for (const auto& jw : jv.at("words")) {
                EndpointWord w;
                w.label = jw.at("label").get<std::string>();
                w.long_name = jw.value("long_name", w.label);
                const auto& l = jw.at("left");
                const auto& r = jw.at("right");
                w.spec = {l.at(0).get<double>(), l.at(1).get<double>(), r.at(0).get<double>(),
                          r.at(1).get<double>()};
                var.words.push_back(std::move(w));
            }
            doc.variables.push_back(std::move(var));
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw schema_error("endpoint document " + file.string() + ": " + e.what());
    }
}

Codebook synthesize_codebook(const EndpointDocument& doc, EncoderMethod method, int n,
                             std::uint64_t seed, double grid_step) {
    Rng master(seed);
    std::vector<LinguisticVariable> vars;
    for (const auto& ev : doc.variables) {
        LinguisticVariable var;
        var.name = ev.name;
        for (const auto& ew : ev.words) {
            const std::uint64_t word_seed = master.next();
            const auto intervals = synthesize_person_intervals(ew.spec, n, word_seed, doc.scale);
            Word w;
            w.label = ew.label;
            w.long_name = ew.long_name;
            w.fou = encode_word(intervals, method, doc.scale);
            var.words.push_back(std::move(w));
        }
        vars.push_back(std::move(var));
    }
    std::ostringstream prov;
    prov << "synthesized(method=" << to_string(method) << ", seed=" << seed << ", n=" << n << ")";
    return Codebook(doc.scale, prov.str(), std::move(vars), grid_step);
}

} // namespace molop
