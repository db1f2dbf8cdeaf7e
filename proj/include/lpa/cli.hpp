#ifndef LPA_CLI_HPP
#define LPA_CLI_HPP

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lpa/cohomology.hpp"
#include "lpa/textio.hpp"

namespace lpa::cli {

struct CliResult {
    int exit_code = 0;
    std::string output;
};

namespace detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::vector<std::string>> options;
    std::set<std::string> flags;

    bool has(const std::string& name) const {
        return flags.count(name) || options.count(name);
    }
    std::string get(const std::string& name, const std::string& fallback = "") const {
        auto it = options.find(name);
        return it == options.end() ? fallback : it->second.back();
    }
};

inline Args parse_args(const std::vector<std::string>& argv, const std::set<std::string>& flags,
                       const std::set<std::string>& valued) {
    Args a;
    for (std::size_t i = 0; i < argv.size(); ++i) {
        const std::string& s = argv[i];
        if (s.rfind("-", 0) == 0 && s != "-") {
            if (flags.count(s)) {
                a.flags.insert(s);
            } else if (valued.count(s)) {
                if (i + 1 == argv.size()) throw UsageError("missing value for " + s);
                a.options[s].push_back(argv[++i]);
            } else {
                throw UsageError("unknown option " + s);
            }
        } else {
            a.positional.push_back(s);
        }
    }
    return a;
}

inline std::size_t parse_count(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size() || v < 0) throw std::invalid_argument("");
        return static_cast<std::size_t>(v);
    } catch (...) {
        throw UsageError("bad " + what + ": '" + s + "'");
    }
}

class Printer {
public:
    explicit Printer(bool machine) : machine_(machine) {}

    void kv(const std::string& key, const std::string& value) {
        if (machine_)
            out_ << key << '\t' << value << '\n';
        else
            out_ << key << ": " << value << '\n';
    }
    void kv(const std::string& key, std::size_t value) { kv(key, std::to_string(value)); }
    void kv(const std::string& key, long value) { kv(key, std::to_string(value)); }
    void line(const std::string& s) {
        if (!machine_) out_ << s << '\n';
    }
    std::string str() const { return out_.str(); }

private:
    bool machine_;
    std::ostringstream out_;
};

inline Quiver load_quiver(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open quiver file: " + path);
    return Quiver::validate(parse_quiver_file(in));
}

inline Field parse_field(const std::string& s) {
    if (s == "q") return Field{0};
    if (s.rfind("gf:", 0) == 0) {
        unsigned long p = std::stoul(s.substr(3));
        if (p < 2) throw UsageError("bad prime in --field");
        return Field{p};
    }
    throw UsageError("bad --field value '" + s + "' (expected q or gf:<p>)");
}

}  // namespace detail

inline const char* kUsage =
    "usage: lpa [--field q|gf:<p>] [--format text|machine] <command> ...\n"
    "commands:\n"
    "  check <file>\n"
    "  normalize <file> -e <expr>\n"
    "  equal <file> -a <expr> -b <expr>\n"
    "  basis <file> --max-len N\n"
    "  verify <file> [--seed S] [--samples K]\n"
    "  exactness <file> [--max-len N --slack M | --full]\n"
    "  center <file> [--max-len N | --full]\n"
    "  hh1 <file>\n"
    "  derivation <file> --component <vertex>=<expr> ... [--eval <expr>]\n";

inline CliResult run_cli(const std::vector<std::string>& argv) {
    using namespace detail;
    try {
        Args global = parse_args(argv, {"--full"},
                                 {"--field", "--format", "--seed", "--samples", "--max-len",
                                  "--slack", "-e", "-a", "-b", "--component", "--eval"});
        if (global.positional.empty()) return {2, kUsage};
        std::string cmd = global.positional[0];
        Field field = parse_field(global.get("--field", "q"));
        std::string fmt = global.get("--format", "text");
        if (fmt != "text" && fmt != "machine") throw UsageError("bad --format value");
        Printer out(fmt == "machine");

        if (global.positional.size() < 2) throw UsageError("missing quiver file");
        Quiver q = load_quiver(global.positional[1]);
        if (global.positional.size() > 2)
            throw UsageError("unexpected argument '" + global.positional[2] + "'");

        if (cmd == "check") {
            out.kv("vertices", q.num_vertices());
            out.kv("arrows", q.num_arrows());
            std::string reg;
            for (std::uint32_t v : q.regular_vertices()) {
                if (!reg.empty()) reg += " ";
                reg += q.vertex_name(v);
            }
            out.kv("regular", reg);
            for (std::uint32_t v : q.regular_vertices())
                out.kv("special." + q.vertex_name(v),
                       q.arrow_name(static_cast<std::uint32_t>(q.special_arrow(v))));
            out.kv("result", "ok");
            return {0, out.str()};
        }
        if (cmd == "normalize") {
            if (!global.has("-e")) throw UsageError("normalize requires -e <expr>");
            Element x = parse_expr(global.get("-e"), q, field);
            out.kv("normal_form", print_canonical(normal_form(x)));
            return {0, out.str()};
        }
        if (cmd == "equal") {
            if (!global.has("-a") || !global.has("-b"))
                throw UsageError("equal requires -a <expr> and -b <expr>");
            Element a = parse_expr(global.get("-a"), q, field);
            Element b = parse_expr(global.get("-b"), q, field);
            Element diff = normal_form(a - b);
            bool eq = diff.is_zero();
            out.kv("equal", eq ? "true" : "false");
            if (!eq) out.kv("difference", print_canonical(diff));
            return {eq ? 0 : 1, out.str()};
        }
        if (cmd == "basis") {
            if (!global.has("--max-len")) throw UsageError("basis requires --max-len N");
            std::size_t n = parse_count(global.get("--max-len"), "--max-len");
            std::vector<Word> basis = basis_up_to(q, n);
            out.kv("count", basis.size());
            for (const Word& w : basis) out.kv("monomial", print_word(q, w));
            return {0, out.str()};
        }
        if (cmd == "verify") {
            VerifyOptions opt;
            opt.seed = parse_count(global.get("--seed", "0"), "--seed");
            opt.samples = parse_count(global.get("--samples", "1000"), "--samples");
            out.kv("field", field.name());
            out.kv("seed", static_cast<std::size_t>(opt.seed));
            out.kv("samples", opt.samples);
            bool all_ok = true;
            std::string first_witness;
            for (const ChainMapReport& r : verify_identities(q, field, opt)) {
                out.kv("check." + r.name, r.holds ? "ok" : "fail");
                if (!r.holds) {
                    all_ok = false;
                    out.kv("witness." + r.name, r.witness);
                }
            }
            out.kv("result", all_ok ? "ok" : "fail");
            return {all_ok ? 0 : 1, out.str()};
        }
        if (cmd == "exactness") {
            out.kv("field", field.name());
            if (global.has("--full")) {
                ExactnessReport rep = verify_exactness_finite(q, field);
                out.kv("mode", "full");
                out.kv("dim_L", rep.dim_L);
                out.kv("dim_LL", rep.dim_LL);
                out.kv("dim_P", rep.dim_P);
                out.kv("rank_partial", rep.rank_partial);
                out.kv("rank_m", rep.rank_m);
                out.kv("dim_ker_m", rep.dim_ker_m);
                out.kv("injective", rep.injective ? "yes" : "no");
                out.kv("ker_eq_im", rep.ker_eq_im ? "yes" : "no");
                out.kv("surjective", rep.surjective ? "yes" : "no");
                out.kv("euler", rep.euler);
                out.kv("result", rep.exact ? "exact" : "fail");
                return {rep.exact ? 0 : 1, out.str()};
            }
            std::size_t n = parse_count(global.get("--max-len", "4"), "--max-len");
            std::size_t slack = parse_count(global.get("--slack", "2"), "--slack");
            TruncatedExactnessReport rep = verify_exactness_truncated(q, field, n, slack);
            out.kv("mode", "truncated");
            out.kv("max_len", rep.length_bound);
            out.kv("slack", rep.slack);
            out.kv("kernel_dim", rep.kernel_dim);
            out.kv("solved", rep.solved);
            out.kv("unsolved", rep.unsolved);
            out.kv("result", rep.unsolved == 0 ? "ok" : "inconclusive");
            return {rep.unsolved == 0 ? 0 : 1, out.str()};
        }
        if (cmd == "center") {
            std::optional<std::size_t> bound;
            if (!global.has("--full"))
                bound = parse_count(global.get("--max-len", "4"), "--max-len");
            CenterReport rep = center(q, field, bound);
            out.kv("field", field.name());
            out.kv("mode", bound ? "truncated" : "full");
            if (bound) out.kv("max_len", *bound);
            out.kv("dim", rep.dim);
            for (const Element& z : rep.basis) out.kv("z", print_canonical(z));
            return {0, out.str()};
        }
        if (cmd == "hh1") {
            HH1Report rep = hh1(q, field);
            out.kv("field", field.name());
            out.kv("source_dim", rep.source_dim);
            out.kv("target_dim", rep.target_dim);
            out.kv("rank", rep.rank);
            out.kv("dim_hh1", rep.dim_hh1);
            for (const auto& comp : rep.representatives)
                for (const auto& [j, e] : comp)
                    out.kv("outer." + q.vertex_name(j), print_canonical(e));
            return {0, out.str()};
        }
        if (cmd == "derivation") {
            auto it = global.options.find("--component");
            if (it == global.options.end())
                throw UsageError("derivation requires --component <vertex>=<expr>");
            std::map<std::uint32_t, Element> comps;
            for (const std::string& spec : it->second) {
                std::size_t eq = spec.find('=');
                if (eq == std::string::npos)
                    throw UsageError("bad --component '" + spec + "' (expected vertex=expr)");
                auto v = q.vertex(spec.substr(0, eq));
                if (!v) throw UsageError("unknown vertex in --component: " + spec.substr(0, eq));
                comps.insert_or_assign(*v,
                                       normal_form(parse_expr(spec.substr(eq + 1), q, field)));
            }
            ComponentDerivation d(q, field, comps);
            out.kv("field", field.name());
            for (const auto& [v, e] : comps)
                out.kv("component." + q.vertex_name(v), print_canonical(e));
            if (global.has("--eval")) {
                Element x = parse_expr(global.get("--eval"), q, field);
                out.kv("value", print_canonical(d(x)));
            }
            if (q.is_acyclic()) {
                InnernessVerdict verdict = outer_derivation_witness(q, field, comps);
                out.kv("inner", verdict.inner ? "yes" : "no");
                if (verdict.inner)
                    out.kv("implementing_element", print_canonical(*verdict.implementing_element));
            }
            return {0, out.str()};
        }
        throw UsageError("unknown command '" + cmd + "'");
    } catch (const detail::UsageError& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    } catch (const ParseError& e) {
        return {2, std::string("parse error: ") + e.what() + "\n"};
    } catch (const QuiverError& e) {
        return {2, std::string("quiver error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace lpa::cli

#endif
