#ifndef LOOPSPACE_CLI_HPP
#define LOOPSPACE_CLI_HPP

// Command-line front end: homology, series, closed-form and check.
// Exit codes: 0 success, 2 invalid arguments, 3 budget exceeded, 4 mismatch.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <boost/crc.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include "loopspace/loopspace.hpp"

namespace loopspace::cli {

inline constexpr const char* version = "1.0.0";

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_budget = 3;
inline constexpr int exit_mismatch = 4;

/// Number of kernel dimensions computed by an engine (cache hits excluded).
inline std::atomic<std::uint64_t> kernel_evaluations{0};

using Json = nlohmann::ordered_json;

enum class Command { Homology, Series, ClosedForm, Check };
enum class MethodChoice { Oracle, Counting, Both };
enum class Format { Table, Json, Csv };

struct JobRequest {
    Command command = Command::Homology;
    std::vector<int> sphere_dims;
    FieldTag field = FieldTag::Rationals;
    int max_degree = 20;
    MethodChoice method = MethodChoice::Oracle;
    Format format = Format::Table;
    std::optional<int> terms;
    std::optional<std::string> cache_path;
    std::uint64_t budget = default_word_budget;
    bool breakdown = false;
    int n = 0; // closed-form sphere dimension
    int k = 1; // closed-form loop order
};

inline const char* to_string(MethodChoice m) {
    switch (m) {
    case MethodChoice::Oracle: return "oracle";
    case MethodChoice::Counting: return "counting";
    case MethodChoice::Both: return "both";
    }
    return "";
}

/// Raised when the two engines disagree.
class Mismatch : public Error {
public:
    using Error::Error;
};

/// Kernel dimensions persisted as one JSON document. A document that fails to
/// parse, has the wrong version or a bad checksum is treated as empty.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

    static std::string key(const WedgeSpec& w, MethodChoice m, int degree) {
        std::string k = std::string("v") + version + "|" + to_string(w.field()) + "|" + to_string(m) + "|";
        for (std::size_t i = 0; i < w.sphere_dims().size(); ++i)
            k += (i ? "," : "") + std::to_string(w.sphere_dims()[i]);
        return k + "|" + std::to_string(degree);
    }

    std::optional<BigInt> get(const std::string& key) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        return BigInt(it->second);
    }

    void put(const std::string& key, const BigInt& value) {
        entries_[key] = value.str();
        dirty_ = true;
    }

    void save() {
        if (!dirty_) return;
        Json entries = Json::object();
        for (const auto& [k, v] : entries_) entries[k] = v;
        Json doc;
        doc["version"] = version;
        doc["entries"] = entries;
        doc["checksum"] = checksum(entries.dump());
        const auto tmp = std::filesystem::path(path_.string() + ".tmp");
        {
            std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
            f << doc.dump(2) << '\n';
        }
        std::filesystem::rename(tmp, path_);
        dirty_ = false;
    }

    std::size_t size() const noexcept { return entries_.size(); }

    static std::string checksum(const std::string& text) {
        boost::crc_32_type crc;
        crc.process_bytes(text.data(), text.size());
        std::ostringstream os;
        os << std::hex << std::setw(8) << std::setfill('0') << crc.checksum();
        return os.str();
    }

private:
    void load() {
        std::ifstream f(path_, std::ios::binary);
        if (!f) return;
        try {
            Json doc = Json::parse(f);
            if (doc.at("version").get<std::string>() != version) return;
            const Json& entries = doc.at("entries");
            if (doc.at("checksum").get<std::string>() != checksum(entries.dump())) return;
            for (const auto& [k, v] : entries.items()) entries_[k] = v.get<std::string>();
        } catch (const nlohmann::json::exception&) {
            entries_.clear();
        }
    }

    std::filesystem::path path_;
    std::map<std::string, std::string> entries_;
    bool dirty_ = false;
};

namespace detail {

inline std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

inline std::string wedge_name(const WedgeSpec& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " v S^" : "S^") + std::to_string(w.sphere_dims()[i]);
    return s;
}

inline std::uint64_t engine_kernel(const WedgeSpec& w, int degree, Method m, std::uint64_t budget) {
    ++kernel_evaluations;
    return kernel_dim(w, degree, m, budget);
}

inline BigInt kernel_for(const WedgeSpec& w, int degree, const JobRequest& req, ResultCache* cache) {
    const std::string key = ResultCache::key(w, req.method, degree);
    if (cache)
        if (auto hit = cache->get(key)) return *hit;
    BigInt value;
    switch (req.method) {
    case MethodChoice::Oracle: value = engine_kernel(w, degree, Method::Oracle, req.budget); break;
    case MethodChoice::Counting: value = engine_kernel(w, degree, Method::Counting, req.budget); break;
    case MethodChoice::Both: {
        const auto a = engine_kernel(w, degree, Method::Oracle, req.budget);
        const auto b = engine_kernel(w, degree, Method::Counting, req.budget);
        if (a != b)
            throw Mismatch("degree " + std::to_string(degree) + ": oracle kernel " + std::to_string(a) +
                           " != counting kernel " + std::to_string(b));
        value = a;
        break;
    }
    }
    if (cache) cache->put(key, value);
    return value;
}

inline PoincareSeries compute_series(const WedgeSpec& w, const JobRequest& req) {
    std::optional<ResultCache> cache;
    if (req.cache_path) cache.emplace(*req.cache_path);
    std::vector<BigInt> kernels(static_cast<std::size_t>(req.max_degree) + 1);
    for (int n = 1; n <= req.max_degree; ++n)
        kernels[n] = kernel_for(w, n, req, cache ? &*cache : nullptr);
    if (cache) cache->save();
    return assemble_series(kernels, req.method == MethodChoice::Counting ? Provenance::EngineCounting
                                                                         : Provenance::EngineOracle);
}

inline Json series_json(const WedgeSpec& w, const JobRequest& req, const PoincareSeries& s) {
    Json doc;
    doc["wedge"] = w.sphere_dims();
    doc["field"] = to_string(w.field());
    doc["method"] = to_string(req.method);
    Json betti = Json::object();
    for (int n = 0; n <= s.max_degree(); ++n) betti[std::to_string(n)] = s.coefficient(n).str();
    doc["betti"] = betti;
    doc["version"] = version;
    return doc;
}

inline void write_csv(std::ostream& out, const PoincareSeries& s) {
    out << "degree,dimension\n";
    for (int n = 0; n <= s.max_degree(); ++n) out << n << ',' << s.coefficient(n).str() << '\n';
}

inline void write_header(std::ostream& out, const WedgeSpec& w, const JobRequest& req) {
    out << "wedge: " << wedge_name(w) << "  (spheres " << join(w.sphere_dims())
        << "; generator degrees " << join(w.generator_degrees()) << ")\n";
    out << "field: " << to_string(w.field()) << "  method: " << to_string(req.method) << '\n';
}

inline Json breakdown_json(const WedgeSpec& w, const JobRequest& req) {
    Json all = Json::object();
    for (int n = 1; n <= req.max_degree; ++n) {
        Json rows = Json::array();
        for (const auto& p : partition_breakdown(w, n, req.budget)) {
            std::vector<int> gens;
            for (Letter g : p.generators) gens.push_back(g + 1);
            Json r;
            r["generators"] = gens;
            r["degrees"] = p.parts;
            r["orbits"] = p.orbit_count;
            rows.push_back(r);
        }
        all[std::to_string(n)] = rows;
    }
    return all;
}

inline void write_breakdown_table(std::ostream& out, const WedgeSpec& w, const JobRequest& req) {
    for (int n = 1; n <= req.max_degree; ++n) {
        auto parts = partition_breakdown(w, n, req.budget);
        std::uint64_t total = 0;
        for (const auto& p : parts) total += p.orbit_count;
        out << "\norbits of degree " << n << ": " << total << " in " << parts.size() << " partition"
            << (parts.size() == 1 ? "" : "s") << '\n';
        for (const auto& p : parts) {
            std::string gens;
            for (std::size_t i = 0; i < p.generators.size(); ++i)
                gens += (i ? "," : "") + std::string("n") + std::to_string(p.generators[i] + 1);
            out << "  [" << gens << "] = [" << join(p.parts) << "]: " << p.orbit_count << '\n';
        }
    }
}

inline int cmd_homology(const JobRequest& req, std::ostream& out) {
    const WedgeSpec w = make_wedge(req.sphere_dims, req.field);
    const PoincareSeries s = compute_series(w, req);
    switch (req.format) {
    case Format::Json: {
        Json doc = series_json(w, req, s);
        if (req.breakdown) doc["breakdown"] = breakdown_json(w, req);
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::Csv: write_csv(out, s); break;
    case Format::Table:
        write_header(out, w, req);
        out << "degree  dimension\n";
        for (int n = 0; n <= s.max_degree(); ++n)
            out << std::left << std::setw(8) << n << s.coefficient(n).str() << '\n';
        if (req.breakdown) write_breakdown_table(out, w, req);
        break;
    }
    return exit_ok;
}

inline int cmd_series(const JobRequest& req, std::ostream& out) {
    const WedgeSpec w = make_wedge(req.sphere_dims, req.field);
    const PoincareSeries s = compute_series(w, req);
    switch (req.format) {
    case Format::Json: out << series_json(w, req, s).dump(2) << '\n'; break;
    case Format::Csv: write_csv(out, s); break;
    case Format::Table: {
        write_header(out, w, req);
        const std::string body = Polynomial(s.coefficients).str("z");
        out << "P(z) = " << body << " + O(z^" << s.max_degree() + 1 << ")\n";
        break;
    }
    }
    return exit_ok;
}

inline int cmd_closed_form(const JobRequest& req, std::ostream& out) {
    const RationalFunction rf = sphere_free_loop_series(req.n, req.k, req.field);
    std::optional<PoincareSeries> expansion;
    if (req.terms) expansion = expand(rf, *req.terms);
    switch (req.format) {
    case Format::Json: {
        auto strings = [](const std::vector<BigInt>& v) {
            std::vector<std::string> s;
            for (const auto& c : v) s.push_back(c.str());
            return s;
        };
        Json doc;
        doc["n"] = req.n;
        doc["k"] = req.k;
        doc["field"] = to_string(req.field);
        doc["numerator"] = strings(rf.numerator().coefficients());
        doc["denominator"] = strings(rf.denominator().coefficients());
        if (expansion) doc["expansion"] = strings(expansion->coefficients);
        doc["version"] = version;
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        if (!expansion) throw DomainError("csv output of closed-form needs --terms");
        write_csv(out, *expansion);
        break;
    case Format::Table:
        out << "n: " << req.n << "  k: " << req.k << "  field: " << to_string(req.field) << '\n';
        out << rf.str() << '\n';
        if (expansion) {
            for (int i = 0; i <= expansion->max_degree(); ++i)
                out << (i ? "," : "") << expansion->coefficient(i).str();
            out << '\n';
        }
        break;
    }
    return exit_ok;
}

/// Per degree and length: ker/coker from the matrix, ker from orbit signs,
/// and every orbit witness pushed through the matrix.
inline int cmd_check(const JobRequest& req, std::ostream& out, std::ostream& err) {
    const WedgeSpec w = make_wedge(req.sphere_dims, req.field);
    std::optional<std::string> first_failure;
    Json rows = Json::array();
    if (req.format == Format::Table) {
        write_header(out, w, req);
        out << "degree  length  words    oracle_ker  oracle_coker  counting_ker  witnesses  status\n";
    } else if (req.format == Format::Csv) {
        out << "degree,length,words,oracle_ker,oracle_coker,counting_ker,witnesses,status\n";
    }
    for (int n = 1; n <= req.max_degree; ++n) {
        check_budget(w, n, req.budget);
        const KernelReport counted = kernel_dims_by_orbits(w, n, req.budget);
        for (std::size_t m = 1; m <= max_word_length(w, n); ++m) {
            const GradedPiece piece = one_minus_tau_piece(w, n, m);
            if (piece.basis.empty()) continue;
            const std::uint64_t r = rank(piece.matrix);
            const std::uint64_t ker = piece.basis.size() - r;
            const std::uint64_t coker = piece.matrix.rows() - r;
            const auto it = counted.per_length.find(m);
            const std::uint64_t counting_ker = it == counted.per_length.end() ? 0 : it->second.ker;

            std::uint64_t witnesses = 0;
            bool witnesses_ok = true;
            for_each_orbit_representative(w, n, m, [&](const Word& rep) {
                auto wit = roos_witness(w, rep);
                if (!wit) return;
                ++witnesses;
                if (!piece.image(*wit).empty()) witnesses_ok = false;
            });

            const bool ok = ker == counting_ker && ker == coker && witnesses == ker && witnesses_ok;
            if (!ok && !first_failure) {
                std::ostringstream os;
                os << "mismatch at degree " << n << ", length " << m << ": oracle ker " << ker
                   << ", oracle coker " << coker << ", counting ker " << counting_ker << ", witnesses "
                   << witnesses << (witnesses_ok ? "" : " (not annihilated)");
                first_failure = os.str();
            }
            const char* status = ok ? "ok" : "MISMATCH";
            if (req.format == Format::Json) {
                Json r;
                r["degree"] = n;
                r["length"] = m;
                r["words"] = piece.basis.size();
                r["oracle_ker"] = ker;
                r["oracle_coker"] = coker;
                r["counting_ker"] = counting_ker;
                r["witnesses"] = witnesses;
                r["status"] = status;
                rows.push_back(r);
            } else if (req.format == Format::Csv) {
                out << n << ',' << m << ',' << piece.basis.size() << ',' << ker << ',' << coker << ','
                    << counting_ker << ',' << witnesses << ',' << status << '\n';
            } else {
                out << std::left << std::setw(8) << n << std::setw(8) << m << std::setw(9)
                    << piece.basis.size() << std::setw(12) << ker << std::setw(14) << coker
                    << std::setw(14) << counting_ker << std::setw(11) << witnesses << status << '\n';
            }
        }
    }
    if (req.format == Format::Json) {
        Json doc;
        doc["wedge"] = w.sphere_dims();
        doc["field"] = to_string(w.field());
        doc["max_degree"] = req.max_degree;
        doc["checks"] = rows;
        doc["all_agree"] = !first_failure;
        doc["version"] = version;
        out << doc.dump(2) << '\n';
    } else if (req.format == Format::Table) {
        out << (first_failure ? "MISMATCH" : "all-agree") << '\n';
    }
    if (first_failure) {
        err << *first_failure << '\n';
        return exit_mismatch;
    }
    return exit_ok;
}

inline int dispatch(const JobRequest& req, std::ostream& out, std::ostream& err) {
    switch (req.command) {
    case Command::Homology: return cmd_homology(req, out);
    case Command::Series: return cmd_series(req, out);
    case Command::ClosedForm: return cmd_closed_form(req, out);
    case Command::Check: return cmd_check(req, out, err);
    }
    return exit_invalid;
}

} // namespace detail

/// Parses arguments (without the program name) and runs one command.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Homology of free loop spaces of wedges of spheres", "loopspace"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version);

    JobRequest req;
    std::string field = "q", method = "oracle", format = "table";
    const std::map<std::string, FieldTag> fields{{"q", FieldTag::Rationals}, {"gf2", FieldTag::GF2}};
    const std::map<std::string, MethodChoice> methods{
        {"oracle", MethodChoice::Oracle}, {"counting", MethodChoice::Counting}, {"both", MethodChoice::Both}};
    const std::map<std::string, Format> formats{
        {"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};

    auto add_common = [&](CLI::App* sub, bool with_wedge) {
        sub->add_option("--field", field, "Coefficient field: q or gf2")
            ->check(CLI::IsMember({"q", "gf2"}));
        sub->add_option("--format", format, "Output format: table, json or csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        if (!with_wedge) return;
        sub->add_option("--spheres", req.sphere_dims, "Sphere dimensions d1,d2,...")
            ->required()
            ->delimiter(',');
        sub->add_option("--max-degree", req.max_degree, "Highest degree computed")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--budget", req.budget, "Maximum basis words per degree");
    };

    auto* homology = app.add_subcommand("homology", "Betti numbers of LW up to --max-degree");
    add_common(homology, true);
    homology->add_option("--method", method, "oracle, counting or both")
        ->check(CLI::IsMember({"oracle", "counting", "both"}));
    homology->add_option("--cache", req.cache_path, "JSON result cache file");
    homology->add_flag("--breakdown", req.breakdown, "List orbits by partition for every degree");

    auto* series = app.add_subcommand("series", "Truncated Poincare series of LW");
    add_common(series, true);
    series->add_option("--method", method, "oracle, counting or both")
        ->check(CLI::IsMember({"oracle", "counting", "both"}));
    series->add_option("--cache", req.cache_path, "JSON result cache file");

    auto* closed = app.add_subcommand("closed-form", "Closed Poincare series of the k-fold free loop space of S^n");
    add_common(closed, false);
    closed->add_option("--n", req.n, "Sphere dimension")->required();
    closed->add_option("--k", req.k, "Loop order k");
    closed->add_option("--terms", req.terms, "Expand through this degree")->check(CLI::NonNegativeNumber);

    auto* check = app.add_subcommand("check", "Compare the matrix and orbit engines degree by degree");
    add_common(check, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    }

    if (homology->parsed()) req.command = Command::Homology;
    else if (series->parsed()) req.command = Command::Series;
    else if (closed->parsed()) req.command = Command::ClosedForm;
    else req.command = Command::Check;
    req.field = fields.at(field);
    req.method = methods.at(method);
    req.format = formats.at(format);

    try {
        return detail::dispatch(req, out, err);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return exit_budget;
    } catch (const Mismatch& e) {
        err << "error: " << e.what() << '\n';
        return exit_mismatch;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    }
}

} // namespace loopspace::cli

#endif
