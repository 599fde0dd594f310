#include "molop/report.hpp"

#include "molop/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace molop {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

std::string tuple_text(const TwoTupleCell& cell, int decimals) {
    if (std::abs(cell.tuple.alpha) < 1e-12)
        return cell.tuple.label;
    std::ostringstream os;
    os << "(" << cell.tuple.label << ", " << (cell.tuple.alpha >= 0 ? "+" : "")
       << fixed(cell.tuple.alpha, decimals) << ")";
    return os.str();
}

bool has_pr(const RecommendationReport& r) {
    for (const auto& m : r.provenance.methods)
        if (m == "pr")
            return true;
    return false;
}

bool has_tt(const RecommendationReport& r) {
    for (const auto& m : r.provenance.methods)
        if (m == "two-tuple")
            return true;
    return false;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += sep;
        out += xs[i];
    }
    return out;
}

std::string render_markdown(const RecommendationReport& r) {
    std::ostringstream os;
    os << "# Scheduling recommendation report\n\n";
    os << "codebook: " << r.provenance.codebook << "  \n";
    os << "methods: " << join(r.provenance.methods, ", ") << "  \n";
    os << "height mode: " << r.provenance.height_mode << ", grid step: " << r.provenance.grid_step
       << ", firing floor: " << r.provenance.firing_floor << ", seed: " << r.provenance.seed
       << "\n\n";

    const bool pr = has_pr(r);
    const bool tt = has_tt(r);

    os << "## Per-welder recommendations\n\n";
    std::vector<std::string> cols{"Welder"};
    for (const auto& obj : r.objectives) {
        if (pr) {
            cols.push_back(obj + " N (pr)");
            cols.push_back(obj + " L (pr)");
        }
        if (tt) {
            cols.push_back(obj + " N (2-tuple)");
            cols.push_back(obj + " L (2-tuple)");
        }
    }
    os << "| " << join(cols, " | ") << " |\n";
    os << "|" << [&] {
        std::string sep;
        for (std::size_t i = 0; i < cols.size(); ++i)
            sep += "---|";
        return sep;
    }() << "\n";
    if (pr || tt) {
        for (const auto& row : r.rows) {
            std::vector<std::string> cells{std::to_string(row.id)};
            for (const auto& obj : r.objectives) {
                if (pr) {
                    const auto& rec = row.pr.at(obj);
                    cells.push_back(fixed(rec.numeric, 2));
                    cells.push_back(rec.linguistic);
                }
                if (tt) {
                    const auto& cell = row.two_tuple.at(obj);
                    cells.push_back(fixed(cell.beta, 2));
                    cells.push_back(tuple_text(cell, 2));
                }
            }
            os << "| " << join(cells, " | ") << " |\n";
        }
    }

    os << "\n## Overall\n\n";
    std::vector<std::string> ocols{"Objective"};
    if (pr) {
        ocols.push_back("N (pr)");
        ocols.push_back("L (pr)");
    }
    if (tt) {
        ocols.push_back("N (2-tuple)");
        ocols.push_back("L (2-tuple)");
    }
    os << "| " << join(ocols, " | ") << " |\n";
    os << "|" << [&] {
        std::string sep;
        for (std::size_t i = 0; i < ocols.size(); ++i)
            sep += "---|";
        return sep;
    }() << "\n";
    if (pr || tt) {
        for (const auto& obj : r.objectives) {
            std::vector<std::string> cells{obj};
            if (pr) {
                const auto& rec = r.overall_pr.at(obj);
                cells.push_back(fixed(rec.numeric, 2));
                cells.push_back(rec.linguistic);
            }
            if (tt) {
                const auto& cell = r.overall_two_tuple.at(obj);
                cells.push_back(fixed(cell.beta, 2));
                cells.push_back(tuple_text(cell, 2));
            }
            os << "| " << join(cells, " | ") << " |\n";
        }
    }
    return os.str();
}

std::string render_csv(const RecommendationReport& r) {
    std::ostringstream os;
    os << "scope,welder,objective,method,numeric,label,alpha,similarity\n";
    const bool pr = has_pr(r);
    const bool tt = has_tt(r);
    for (const auto& row : r.rows) {
        for (const auto& obj : r.objectives) {
            if (pr) {
                const auto& rec = row.pr.at(obj);
                os << "welder," << row.id << ',' << obj << ",pr," << fixed(rec.numeric, 6) << ','
                   << rec.linguistic << ",," << fixed(rec.similarity_to_word, 6) << "\n";
            }
            if (tt) {
                const auto& cell = row.two_tuple.at(obj);
                os << "welder," << row.id << ',' << obj << ",two-tuple," << fixed(cell.beta, 6) << ','
                   << cell.tuple.label << ',' << fixed(cell.tuple.alpha, 6) << ",\n";
            }
        }
    }
    for (const auto& obj : r.objectives) {
        if (pr) {
            const auto& rec = r.overall_pr.at(obj);
            os << "overall,," << obj << ",pr," << fixed(rec.numeric, 6) << ',' << rec.linguistic
               << ",," << fixed(rec.similarity_to_word, 6) << "\n";
        }
        if (tt) {
            const auto& cell = r.overall_two_tuple.at(obj);
            os << "overall,," << obj << ",two-tuple," << fixed(cell.beta, 6) << ','
               << cell.tuple.label << ',' << fixed(cell.tuple.alpha, 6) << ",\n";
        }
    }
    return os.str();
}

ordered_json fou_json(const IT2TrapezoidFOU& fou) {
    ordered_json j;
    j["umf"] = {fou.umf.a, fou.umf.b, fou.umf.c, fou.umf.d};
    j["lmf"] = {{"points", {fou.lmf.a, fou.lmf.b, fou.lmf.c, fou.lmf.d}}, {"height", fou.lmf.h}};
    return j;
}

ordered_json recommendation_json(const Recommendation& rec) {
    ordered_json j = fou_json(rec.fou);
    j["centroid"] = {rec.centroid.left, rec.centroid.right};
    j["numeric"] = rec.numeric;
    j["label"] = rec.linguistic;
    j["similarity"] = rec.similarity_to_word;
    if (rec.tie)
        j["tie"] = {{"runner_up", rec.tie->runner_up}, {"similarity", rec.tie->similarity}};
    return j;
}

ordered_json tuple_json(const TwoTupleCell& cell) {
    return ordered_json{{"beta", cell.beta}, {"label", cell.tuple.label}, {"alpha", cell.tuple.alpha}};
}

std::string render_structured(const RecommendationReport& r) {
    ordered_json j;
    j["provenance"] = {{"codebook", r.provenance.codebook},
                       {"methods", r.provenance.methods},
                       {"height_mode", r.provenance.height_mode},
                       {"grid_step", r.provenance.grid_step},
                       {"alpha_levels", r.provenance.alpha_levels},
                       {"firing_floor", r.provenance.firing_floor},
                       {"seed", r.provenance.seed}};
    j["objectives"] = r.objectives;
    j["welders"] = ordered_json::array();
    const bool pr = has_pr(r);
    const bool tt = has_tt(r);
    for (const auto& row : r.rows) {
        ordered_json jw;
        jw["id"] = row.id;
        if (pr) {
            jw["firing"] = row.firing.levels;
            jw["pr"] = ordered_json::object();
            for (const auto& obj : r.objectives)
                jw["pr"][obj] = recommendation_json(row.pr.at(obj));
        }
        if (tt) {
            jw["index_firing"] = row.index_firing;
            jw["two_tuple"] = ordered_json::object();
            for (const auto& obj : r.objectives)
                jw["two_tuple"][obj] = tuple_json(row.two_tuple.at(obj));
        }
        j["welders"].push_back(std::move(jw));
    }
    j["overall"] = ordered_json::object();
    if (pr) {
        j["overall"]["pr"] = ordered_json::object();
        for (const auto& obj : r.objectives)
            j["overall"]["pr"][obj] = recommendation_json(r.overall_pr.at(obj));
    }
    if (tt) {
        j["overall"]["two_tuple"] = ordered_json::object();
        for (const auto& obj : r.objectives)
            j["overall"]["two_tuple"][obj] = tuple_json(r.overall_two_tuple.at(obj));
    }
    return j.dump(2) + "\n";
}

} // namespace

std::optional<ReportFormat> report_format_from_string(const std::string& s) {
    if (s == "md" || s == "markdown")
        return ReportFormat::Markdown;
    if (s == "csv")
        return ReportFormat::Csv;
    if (s == "structured" || s == "json")
        return ReportFormat::Structured;
    return std::nullopt;
}

std::string render_report(const RecommendationReport& report, ReportFormat format) {
    switch (format) {
    case ReportFormat::Markdown: return render_markdown(report);
    case ReportFormat::Csv: return render_csv(report);
    case ReportFormat::Structured: return render_structured(report);
    }
    throw invalid_argument("render_report: unknown format");
}

void write_report(const RecommendationReport& report, ReportFormat format,
                  const std::filesystem::path& out) {
    const std::string text = render_report(report, format);
    const std::filesystem::path tmp = out.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f)
            throw io_error("cannot write report: " + tmp.string());
        f << text;
    }
    std::filesystem::rename(tmp, out);
}

std::vector<ReportCell> parse_csv_report(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw io_error("report not found: " + file.string());
    std::vector<ReportCell> cells;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        if (line_no == 1) {
            if (line.rfind("scope,", 0) != 0)
                throw schema_error(file.string() + ": not a report CSV (missing header)");
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            f.push_back(cell);
        while (f.size() < 8)
            f.push_back("");
        ReportCell c;
        c.scope = f[0];
        c.welder = f[1];
        c.objective = f[2];
        c.method = f[3];
        try {
            c.numeric = std::stod(f[4]);
            c.label = f[5];
            if (!f[6].empty())
                c.alpha = std::stod(f[6]);
            if (!f[7].empty())
                c.similarity = std::stod(f[7]);
        } catch (const std::exception&) {
            throw schema_error(file.string() + ":" + std::to_string(line_no) + ": non-numeric cell");
        }
        cells.push_back(std::move(c));
    }
    return cells;
}

std::vector<std::string> compare_reports(const std::vector<ReportCell>& a,
                                         const std::vector<ReportCell>& b, double tol) {
    auto key = [](const ReportCell& c) {
        return c.scope + "/" + c.welder + "/" + c.objective + "/" + c.method;
    };
    std::map<std::string, const ReportCell*> bmap;
    for (const auto& c : b)
        bmap[key(c)] = &c;
    std::vector<std::string> diffs;
    std::map<std::string, bool> seen;
    for (const auto& c : a) {
        const std::string k = key(c);
        seen[k] = true;
        auto it = bmap.find(k);
        if (it == bmap.end()) {
            diffs.push_back(k + ": missing from second report");
            continue;
        }
        const ReportCell& d = *it->second;
        if (std::abs(c.numeric - d.numeric) > tol)
            diffs.push_back(k + ": numeric " + std::to_string(c.numeric) + " vs " +
                            std::to_string(d.numeric));
        if (c.label != d.label)
            diffs.push_back(k + ": label " + c.label + " vs " + d.label);
        const double a1 = c.alpha.value_or(0.0);
        const double a2 = d.alpha.value_or(0.0);
        if (std::abs(a1 - a2) > tol)
            diffs.push_back(k + ": alpha " + std::to_string(a1) + " vs " + std::to_string(a2));
    }
    for (const auto& c : b)
        if (!seen.contains(key(c)))
            diffs.push_back(key(c) + ": missing from first report");
    return diffs;
}

} // namespace molop
