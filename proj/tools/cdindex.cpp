// cdindex: generate posets, compute cd-indices, certify, shell, report.
//
// Exit codes: 0 ok, 1 check failed, 2 bad input, 3 not Eulerian,
// 4 methods disagree, 5 invalid decomposition.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cdindex/cdindex.hpp"

using namespace cdindex;

namespace {

enum Exit { ok = 0, check_failed = 1, bad_input = 2, not_eulerian = 3, mismatch = 4, bad_decomposition = 5 };

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t max_elements()
{
    if (const char* v = std::getenv("CDINDEX_MAX_ELEMENTS")) {
        try {
            const long long n = std::stoll(v);
            if (n > 0) return static_cast<std::size_t>(n);
        } catch (const std::exception&) {
        }
        throw BadInput("CDINDEX_MAX_ELEMENTS must be a positive integer");
    }
    return 20000;
}

void check_size(const GradedPoset& P)
{
    if (P.size() > max_elements())
        throw BadInput("poset has " + std::to_string(P.size()) + " elements, limit is " +
                       std::to_string(max_elements()) + " (CDINDEX_MAX_ELEMENTS)");
}

GradedPoset load(const std::string& path)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw BadInput("cannot read '" + path + "'");
        buf << in.rdbuf();
    }
    std::vector<std::string> notices;
    auto P = poset_from_json_text(buf.str(), &notices);
    for (const auto& n : notices) std::cerr << "notice: " << n << "\n";
    check_size(P);
    return P;
}

Json cd_json(const CdPolynomial& p)
{
    Json terms = Json::object();
    for (const auto& [w, k] : p.terms()) terms[w.letters().empty() ? "1" : w.letters()] = integer_to_json(k);
    return {{"text", p.str()}, {"coefficients", terms}};
}

bool nonnegative(const CdPolynomial& p)
{
    return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second >= 0; });
}

// Ids given either one per argument or as a single JSON array.
std::vector<std::string> id_list(const std::vector<std::string>& args)
{
    if (args.size() == 1 && !args[0].empty() && args[0].front() == '[') {
        try {
            return Json::parse(args[0]).get<std::vector<std::string>>();
        } catch (const nlohmann::json::exception& e) {
            throw BadInput(std::string("bad id list: ") + e.what());
        }
    }
    // CLI11 has already split a bracketed list, leaving JSON-quoted items.
    std::vector<std::string> out;
    for (const auto& a : args) {
        if (a.size() >= 2 && a.front() == '"' && a.back() == '"') {
            try {
                out.push_back(Json::parse(a).get<std::string>());
                continue;
            } catch (const nlohmann::json::exception& e) {
                throw BadInput(std::string("bad id: ") + e.what());
            }
        }
        out.push_back(a);
    }
    return out;
}

int cmd_gen(const std::string& kind, int param, bool pyramid, bool bary, const std::string& out)
{
    GradedPoset P = build_family(parse_family(kind), param);
    if (pyramid) P = build_pyramid(P);
    if (bary) P = barycentric(P, max_elements()).bposet;
    check_size(P);
    const std::string text = poset_to_json(P).dump(1);
    if (out.empty() || out == "-") {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out);
        if (!f) throw BadInput("cannot write '" + out + "'");
        f << text << "\n";
    }
    return ok;
}

int cmd_compute(const std::string& input, const std::string& method, bool json)
{
    const auto P = load(input);
    if (!is_eulerian(P)) {
        std::cerr << "input is not Eulerian\n";
        return not_eulerian;
    }
    std::vector<std::pair<std::string, CdPolynomial>> results;
    try {
        if (method == "flag" || method == "all") results.emplace_back("flag", cd_index_flag(P));
        if (method == "stanley" || method == "all") results.emplace_back("stanley", cd_index_stanley(P));
        if (method == "operator" || method == "all") results.emplace_back("operator", cd_index_operator(P));
    } catch (const NotACdPolynomial&) {
        std::cerr << "input is not Eulerian\n";
        return not_eulerian;
    } catch (const NonIntegralCoefficients&) {
        std::cerr << "input is not Eulerian\n";
        return not_eulerian;
    }
    bool agree = true;
    for (const auto& r : results) agree = agree && r.second == results.front().second;

    if (json) {
        Json j;
        j["rank"] = P.rank();
        j["elements"] = P.size();
        for (const auto& [name, p] : results) j[name] = cd_json(p);
        if (method == "all") j["verdict"] = agree ? "MATCH" : "MISMATCH";
        std::cout << j.dump(2) << "\n";
    } else if (method != "all") {
        std::cout << results.front().second << "\n";
    } else {
        for (const auto& [name, p] : results) std::cout << std::left << std::setw(10) << name << p << "\n";
        std::cout << (agree ? "MATCH" : "MISMATCH") << "\n";
    }
    return agree ? ok : mismatch;
}

int cmd_check(const std::string& input, const std::string& what)
{
    const auto P = load(input);
    Json j;
    bool pass = false;
    if (what == "eulerian") {
        const auto bad = first_non_eulerian_interval(P);
        pass = !bad;
        j["eulerian"] = pass;
        if (bad)
            j["failing_interval"] = {P.id(bad->first), P.id(bad->second)};
        else
            j["failing_interval"] = nullptr;
    } else if (what == "gorenstein-star") {
        const auto cert = gorenstein_star_certificate(P);
        pass = cert.gorenstein_star;
        j = certificate_to_json(cert);
    } else if (what == "duality") {
        const auto h = flag_h(flag_f(P));
        j["duality"] = true;
        j["failing_subset"] = nullptr;
        pass = true;
        for (Subset s = 0; s <= full_subset(h.n); ++s) {
            if (h.at(s) != h.at(complement(s, h.n))) {
                pass = false;
                j["duality"] = false;
                j["failing_subset"] = subset_key(s);
                break;
            }
        }
        j["flag_h"] = subset_polynomial_to_json(h);
    } else {
        const auto bnd = boundary_of(P);
        if (!bnd) {
            const auto cert = gorenstein_star_certificate(P);
            pass = cert.gorenstein_star;
            j["quasi_convex"] = pass;
            j["boundary"] = nullptr;
            j["certificate"] = certificate_to_json(cert);
        } else {
            const auto cert = gorenstein_star_certificate(bnd->poset);
            pass = cert.gorenstein_star;
            j["quasi_convex"] = pass;
            j["boundary"] = poset_to_json(bnd->poset);
            j["certificate"] = certificate_to_json(cert);
        }
    }
    std::cout << j.dump(2) << "\n";
    return pass ? ok : check_failed;
}

int cmd_shell(const std::string& input, const std::vector<std::string>& order, const std::vector<std::string>& pi,
              bool json)
{
    const auto P = load(input);
    try {
        if (!order.empty()) {
            const auto steps = shelling_steps(P, id_list(order));
            const auto total = shelling_sum(steps);
            if (json) {
                Json rows = Json::array();
                for (const auto& s : steps)
                    rows.push_back({{"step", s.step}, {"facet", s.facet}, {"f", s.f.str()}, {"g", s.g.str()}});
                std::cout << Json{{"steps", rows}, {"total", cd_json(total)}}.dump(2) << "\n";
            } else {
                std::cout << std::left << std::setw(6) << "step" << std::setw(16) << "facet" << std::setw(24) << "f"
                          << "g\n";
                for (const auto& s : steps)
                    std::cout << std::setw(6) << s.step << std::setw(16) << s.facet << std::setw(24) << s.f.str()
                              << s.g << "\n";
                std::cout << "total " << total << "\n";
            }
        } else {
            const auto dec = pi_decomposition_detail(P, id_list(pi));
            if (json) {
                Json rows = Json::array();
                for (std::size_t i = 0; i < dec.remaining.size(); ++i)
                    rows.push_back({{"element", dec.remaining[i]}, {"lower", dec.lower[i].str()}});
                std::cout << Json{{"pi", dec.pi_index.str()}, {"remaining", rows}, {"total", cd_json(dec.total)}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "pi       " << dec.pi_index << "\n";
                for (std::size_t i = 0; i < dec.remaining.size(); ++i)
                    std::cout << std::left << std::setw(16) << dec.remaining[i] << dec.lower[i] << "\n";
                std::cout << "total " << dec.total << "\n";
            }
        }
    } catch (const ShellingInvalid& e) {
        std::cerr << "ShellingInvalid at step " << e.step() << ": " << e.what() << "\n";
        return bad_decomposition;
    } catch (const PiNotComplete& e) {
        std::cerr << "PiNotComplete: " << e.what() << "\n";
        return bad_decomposition;
    }
    return ok;
}

struct ReportRow {
    std::string name;
    int rank = 0;
    std::size_t elements = 0;
    bool eulerian = false;
    std::string cd;
    bool nonneg = false;
    bool agree = false;
    bool gorenstein = false;
    std::string error;
};

ReportRow evaluate(const CorpusEntry& e)
{
    ReportRow r;
    r.name = e.name;
    r.rank = e.poset.rank();
    r.elements = e.poset.size();
    r.gorenstein = is_gorenstein_star(e.poset);
    r.eulerian = is_eulerian(e.poset);
    if (!r.eulerian) return r;
    try {
        const auto f = cd_index_flag(e.poset);
        const auto s = cd_index_stanley(e.poset);
        const auto o = cd_index_operator(e.poset);
        r.cd = f.str();
        r.agree = f == s && s == o;
        r.nonneg = nonnegative(f) && nonnegative(s) && nonnegative(o);
    } catch (const Error& ex) {
        r.error = ex.what();
    }
    return r;
}

int cmd_report(const std::string& list, unsigned threads, bool json)
{
    const auto corpus = parse_corpus(list);
    for (const auto& e : corpus) check_size(e.poset);
    std::vector<ReportRow> rows(corpus.size());
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) rows[i] = evaluate(corpus[i]);
    };
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    const auto yn = [](bool b) { return b ? "yes" : "no"; };
    bool all_agree = true;
    if (json) {
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json j{{"name", r.name}, {"rank", r.rank}, {"elements", r.elements}, {"eulerian", r.eulerian},
                   {"gorenstein_star", r.gorenstein}};
            if (r.eulerian && r.error.empty()) {
                j["cd_index"] = r.cd;
                j["nonneg"] = r.nonneg;
                j["agree"] = r.agree;
            }
            if (!r.error.empty()) j["error"] = r.error;
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        std::size_t w = 6;
        for (const auto& r : rows) w = std::max(w, r.name.size() + 2);
        std::cout << std::left << std::setw(static_cast<int>(w)) << "poset" << std::setw(6) << "rank" << std::setw(9)
                  << "elems" << std::setw(8) << "nonneg" << std::setw(7) << "agree" << std::setw(12) << "gorenstein*"
                  << "cd-index\n";
        for (const auto& r : rows) {
            std::cout << std::setw(static_cast<int>(w)) << r.name << std::setw(6) << r.rank << std::setw(9)
                      << r.elements;
            if (!r.eulerian)
                std::cout << std::setw(8) << "-" << std::setw(7) << "-" << std::setw(12) << yn(r.gorenstein)
                          << "non-Eulerian\n";
            else if (!r.error.empty())
                std::cout << std::setw(8) << "-" << std::setw(7) << "-" << std::setw(12) << yn(r.gorenstein)
                          << "error: " << r.error << "\n";
            else
                std::cout << std::setw(8) << yn(r.nonneg) << std::setw(7) << yn(r.agree) << std::setw(12)
                          << yn(r.gorenstein) << r.cd << "\n";
        }
    }
    for (const auto& r : rows)
        if (r.eulerian && (!r.agree || !r.error.empty())) all_agree = false;
    return all_agree ? ok : mismatch;
}

int cmd_trace(const std::string& input, const std::string& word)
{
    const auto P = load(input);
    const auto p = parse_cd(word);
    if (p.terms().size() != 1 || p.terms().begin()->second != 1) throw BadInput("--word must be a single cd-monomial");
    const CdWord w = p.terms().begin()->first;
    const auto trace = monomial_trace(P, w);
    std::cout << std::left << std::setw(6) << "step" << std::setw(8) << "op" << std::setw(7) << "level"
              << std::setw(12) << "at bottom" << "min\n";
    const auto& letters = w.letters();
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const auto& f = trace[i];
        Integer lo = f(P.bottom());
        for (Element x : f.domain()) lo = std::min(lo, f(x));
        const std::string op = i == 0 ? "1" : std::string(1, static_cast<char>(std::toupper(letters[letters.size() - i])));
        std::cout << std::setw(6) << i << std::setw(8) << op << std::setw(7) << f.level() << std::setw(12)
                  << to_string(f(P.bottom())) << to_string(lo) << "\n";
    }
    std::cout << "coefficient of " << w.str() << ": " << trace.back()(P.bottom()) << "\n";
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"cd-index of Eulerian and Gorenstein* posets"};
    app.require_subcommand(1);

    std::string kind, input, out, method = "flag", what, corpus = "default", word;
    int param = 0;
    bool pyramid = false, bary = false, json = false;
    unsigned threads = 0;
    std::vector<std::string> order, pi;

    auto* gen = app.add_subcommand("gen", "build a poset from a family");
    gen->add_option("kind", kind, "polygon | simplex_fan | cube_fan | crosspoly_fan | chain")->required();
    gen->add_option("param", param, "family parameter")->required();
    gen->add_flag("--pyramid", pyramid, "take the pyramid");
    gen->add_flag("--barycentric", bary, "take the chain lattice (after --pyramid)");
    gen->add_option("--out", out, "output file (default stdout)");

    auto* compute = app.add_subcommand("compute", "cd-index of a poset");
    compute->add_option("--input", input, "poset JSON, '-' for stdin")->required();
    compute->add_option("--method", method)->check(CLI::IsMember({"flag", "stanley", "operator", "all"}));
    compute->add_flag("--json", json);

    auto* check = app.add_subcommand("check", "certify a property");
    check->add_option("--input", input)->required();
    check->add_option("--what", what)
        ->required()
        ->check(CLI::IsMember({"eulerian", "gorenstein-star", "duality", "quasi-convex"}));

    auto* shell = app.add_subcommand("shell", "shelling sum or Pi decomposition");
    shell->add_option("--input", input)->required();
    auto* o_order = shell->add_option("--order", order, "facet ids in shelling order");
    auto* o_pi = shell->add_option("--pi", pi, "ids of the Pi elements");
    o_order->excludes(o_pi);
    shell->add_flag("--json", json);

    auto* report = app.add_subcommand("report", "evaluate a corpus");
    report->add_option("--corpus", corpus, "e.g. default, polygon:3..12, simplex_fan:3+pyramid");
    report->add_option("--threads", threads, "worker threads (0 = all cores)");
    report->add_flag("--json", json);

    auto* trace = app.add_subcommand("trace", "operator evaluation of one cd-monomial, step by step");
    trace->add_option("--input", input)->required();
    trace->add_option("--word", word)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return bad_input;
    }

    try {
        if (*gen) return cmd_gen(kind, param, pyramid, bary, out);
        if (*compute) return cmd_compute(input, method, json);
        if (*check) return cmd_check(input, what);
        if (*shell) {
            if (order.empty() && pi.empty()) throw BadInput("shell needs --order or --pi");
            return cmd_shell(input, order, pi, json);
        }
        if (*report) return cmd_report(corpus, threads, json);
        if (*trace) return cmd_trace(input, word);
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    }
    return bad_input;
}
