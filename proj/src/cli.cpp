#include "discseq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "discseq/convexity.hpp"
#include "discseq/interpolation.hpp"
#include "discseq/subadditivity.hpp"

namespace discseq {

using json = nlohmann::ordered_json;

std::string format_number(double x)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

namespace {

std::string_view trim(std::string_view s)
{
    const auto* ws = " \t\r\n\v\f";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

double parse_real(std::string_view token, std::size_t line)
{
    double x = 0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), x);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
        throw Error("line " + std::to_string(line) + ": not a number: '" + std::string(token) + "'");
    return x;
}

Sequence parse_csv(std::string_view text)
{
    int start = 1;
    bool seen_content = false;
    std::vector<double> values;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        auto line = trim(raw);
        if (line.empty())
            continue;
        if (line.front() == '#') {
            auto body = trim(line.substr(1));
            if (seen_content || !body.starts_with("start_index"))
                throw Error("line " + std::to_string(line_no) + ": unexpected comment");
            auto eq = body.find('=');
            auto val = eq == std::string_view::npos ? std::string_view{} : trim(body.substr(eq + 1));
            if (trim(body.substr(0, eq)) != "start_index" || (val != "0" && val != "1"))
                throw Error("line " + std::to_string(line_no) + ": header must be '# start_index=0|1'");
            start = val == "0" ? 0 : 1;
            seen_content = true;
            continue;
        }
        seen_content = true;
        values.push_back(parse_real(line, line_no));
    }
    return Sequence(start, std::move(values));
}

Sequence parse_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("start_index") || !doc.contains("values"))
        throw Error("JSON sequence needs keys \"start_index\" and \"values\"");
    const auto& si = doc["start_index"];
    if (!si.is_number_integer())
        throw Error("\"start_index\" must be an integer");
    const auto& vals = doc["values"];
    if (!vals.is_array())
        throw Error("\"values\" must be an array");
    std::vector<double> values;
    values.reserve(vals.size());
    for (const auto& x : vals) {
        if (!x.is_number())
            throw Error("\"values\" must contain only numbers");
        values.push_back(x.get<double>());
    }
    return Sequence(si.get<int>(), std::move(values));
}

} // namespace

Sequence parse_sequence(std::string_view text)
{
    auto body = trim(text);
    if (!body.empty() && body.front() == '{')
        return parse_json(body);
    return parse_csv(text);
}

Sequence read_sequence_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sequence(buf.str());
}

std::string sequence_to_csv(const Sequence& u)
{
    std::string out = "# start_index=" + std::to_string(u.start_index()) + "\n";
    for (double x : u.values())
        out += format_number(x) + "\n";
    return out;
}

std::string sequence_to_json(const Sequence& u)
{
    json doc = {{"start_index", u.start_index()},
                {"values", std::vector<double>(u.values().begin(), u.values().end())}};
    return doc.dump() + "\n";
}

void write_sequence_file(const std::filesystem::path& path, const Sequence& u)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path.string());
    out << (path.extension() == ".json" ? sequence_to_json(u) : sequence_to_csv(u));
    if (!out.flush())
        throw Error("cannot write " + path.string());
}

namespace {

enum class Format { json, csv };

struct GlobalOptions {
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    std::string format = "json";
    bool format_given = false;

    ToleranceConfig tolerance() const { return {abs_tol, rel_tol}; }
    Format fmt() const { return format == "csv" ? Format::csv : Format::json; }
};

json to_json(std::span<const double> xs)
{
    return std::vector<double>(xs.begin(), xs.end());
}

json envelope(std::string_view command, const Sequence& u, const GlobalOptions& opts, json result)
{
    const auto flags = classify(u, opts.tolerance());
    return {
        {"tool", kToolName},
        {"version", kToolVersion},
        {"command", command},
        {"input", {{"length", u.size()}, {"start_index", u.start_index()}}},
        {"tolerance", {{"abs_tol", opts.abs_tol}, {"rel_tol", opts.rel_tol}}},
        {"flags",
         {{"nonnegative", flags.nonnegative},
          {"monotone_increasing", flags.monotone_increasing},
          {"monotone_decreasing", flags.monotone_decreasing},
          {"convex", flags.convex},
          {"concave", flags.concave}}},
        {"result", std::move(result)},
    };
}

json witnesses_json(const std::vector<PartitionWitness>& ws)
{
    json arr = json::array();
    for (const auto& w : ws)
        arr.push_back(w.parts);
    return arr;
}

std::string witness_string(const PartitionWitness& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.parts.size(); ++i)
        s += (i ? "+" : "") + std::to_string(w.parts[i]);
    return s;
}

const char* boolstr(bool b) { return b ? "true" : "false"; }

json support_json(const SupportSequence& s)
{
    json pairs = json::array();
    for (auto [a, b] : s.witnesses)
        pairs.push_back({a, b});
    return {{"first_index", s.first_index},
            {"last_index", s.last_index},
            {"v", s.v},
            {"witnesses", pairs}};
}

int cmd_check_convex(const Sequence& u, const GlobalOptions& opts, std::ostream& out)
{
    const auto cert = certify_convexity(u, opts.tolerance());
    if (opts.fmt() == Format::csv) {
        out << "key,value\n"
            << "is_convex," << boolstr(cert.defining.is_convex) << "\n"
            << "slopes_ok," << boolstr(cert.slopes_ok()) << "\n"
            << "support_ok," << boolstr(cert.support_ok()) << "\n"
            << "# violations\nindex,defect\n";
        for (const auto& v : cert.defining.violations)
            out << v.index << "," << format_number(v.defect) << "\n";
    } else {
        json violations = json::array();
        for (const auto& v : cert.defining.violations)
            violations.push_back({{"index", v.index}, {"defect", v.defect}});
        json triple = nullptr;
        if (cert.slopes.first_violation)
            triple = *cert.slopes.first_violation;
        json result = {{"convexity",
                        {{"is_convex", cert.defining.is_convex},
                         {"violations", violations},
                         {"slopes_ok", cert.slopes_ok()},
                         {"first_violating_triple", triple},
                         {"support_ok", cert.support_ok()},
                         {"support", cert.support ? support_json(*cert.support) : json(nullptr)},
                         {"borderline", cert.borderline}}}};
        out << envelope("check-convex", u, opts, std::move(result)).dump(2) << "\n";
    }
    return cert.defining.is_convex ? 0 : 1;
}

int cmd_support(const Sequence& u, const GlobalOptions& opts, std::ostream& out)
{
    const auto s = support_sequence(u);
    if (opts.fmt() == Format::csv) {
        out << "n,v,n1,n2\n";
        for (Index n = s.first_index; n <= s.last_index; ++n) {
            auto [a, b] = s.witnesses[static_cast<std::size_t>(n - s.first_index)];
            out << n << "," << format_number(s.at(n)) << "," << a << "," << b << "\n";
        }
    } else {
        out << envelope("support", u, opts, {{"support", support_json(s)}}).dump(2) << "\n";
    }
    return 0;
}

int cmd_spline(const Sequence& u, const GlobalOptions& opts, int samples, std::ostream& out)
{
    if (u.size() < 3)
        throw Error("spline needs at least 3 terms");
    if (samples < 1)
        throw Error("--samples must be at least 1");
    std::vector<QuadraticPiece> pieces;
    for (Index n = u.first_index() + 1; n < u.last_index(); ++n)
        pieces.push_back(quadratic_piece(u, n));

    const long count = static_cast<long>(samples) * (u.last_index() - u.first_index());
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<std::size_t>(count) + 1);
    for (long k = 0; k <= count; ++k) {
        double x = static_cast<double>(u.first_index()) + static_cast<double>(k) / samples;
        pts.emplace_back(x, spline_eval(u, x));
    }

    // The plot data is CSV unless JSON was asked for explicitly.
    if (opts.format_given && opts.fmt() == Format::json) {
        json jp = json::array();
        for (const auto& p : pieces)
            jp.push_back({{"center", p.center}, {"a", p.a}, {"b", p.b}, {"c", p.c}, {"lo", p.lo()}, {"hi", p.hi()}});
        json js = json::array();
        for (auto [x, y] : pts)
            js.push_back({x, y});
        json result = {{"spline", {{"pieces", jp}, {"samples_per_unit", samples}, {"samples", js}}}};
        out << envelope("spline", u, opts, std::move(result)).dump(2) << "\n";
    } else {
        out << "# pieces\ncenter,a,b,c\n";
        for (const auto& p : pieces)
            out << p.center << "," << format_number(p.a) << "," << format_number(p.b) << "," << format_number(p.c)
                << "\n";
        out << "# samples\nx,y\n";
        for (auto [x, y] : pts)
            out << format_number(x) << "," << format_number(y) << "\n";
    }
    return 0;
}

int cmd_lagrange(const Sequence& u, const GlobalOptions& opts, std::ostream& out, std::ostream& err)
{
    const auto p = lagrange_polynomial(u);
    const bool ill_conditioned = u.size() - 1 > kLagrangeConditioningDegree;
    if (ill_conditioned)
        err << "warning: interpolation degree " << u.size() - 1
            << " exceeds " << kLagrangeConditioningDegree << "; monomial coefficients are ill-conditioned\n";
    std::optional<Curvature> curvature;
    if (u.size() > 1)
        curvature = polynomial_convexity_on_interval(p, static_cast<double>(u.first_index()),
                                                     static_cast<double>(u.last_index()), opts.tolerance());
    if (opts.fmt() == Format::csv) {
        out << "power,coefficient\n";
        for (std::size_t k = 0; k < p.coefficients().size(); ++k)
            out << k << "," << format_number(p.coefficients()[k]) << "\n";
        out << "# curvature=" << (curvature ? to_string(*curvature) : "none") << "\n";
    } else {
        json result = {{"lagrange",
                        {{"degree", p.degree()},
                         {"coefficients", p.coefficients()},
                         {"interval", {u.first_index(), u.last_index()}},
                         {"curvature", curvature ? json(to_string(*curvature)) : json(nullptr)},
                         {"conditioning_warning", ill_conditioned}}}};
        out << envelope("lagrange", u, opts, std::move(result)).dump(2) << "\n";
    }
    return 0;
}

int cmd_hull(const Sequence& u, const GlobalOptions& opts, std::ostream& out)
{
    const auto hull = subadditive_hull(u);
    if (opts.fmt() == Format::csv) {
        out << "n,u,v,witness\n";
        for (long n = 1; n <= u.last_index(); ++n)
            out << n << "," << format_number(u[n]) << "," << format_number(hull.v[n]) << ","
                << witness_string(hull.witnesses[static_cast<std::size_t>(n - 1)]) << "\n";
    } else {
        json result = {{"hull", {{"v", to_json(hull.v.values())}, {"witnesses", witnesses_json(hull.witnesses)}}}};
        out << envelope("hull", u, opts, std::move(result)).dump(2) << "\n";
    }
    return 0;
}

int cmd_epsilon(const Sequence& u, const GlobalOptions& opts, std::ostream& out)
{
    const double eps = epsilon_star(u);
    if (opts.format_given && opts.fmt() == Format::json)
        out << envelope("epsilon", u, opts, {{"epsilon_star", eps}}).dump(2) << "\n";
    else
        out << format_number(eps) << "\n";
    return 0;
}

int cmd_decompose(const Sequence& u, const GlobalOptions& opts, const std::string& out_v,
                  const std::string& out_w, std::ostream& out)
{
    const auto d = decompose(u);
    if (!out_v.empty())
        write_sequence_file(out_v, d.v);
    if (!out_w.empty())
        write_sequence_file(out_w, d.w);
    if (opts.fmt() == Format::csv) {
        out << "# epsilon_star=" << format_number(d.epsilon_star) << "\n";
        out << "n,u,v,w,witness\n";
        for (long n = 1; n <= u.last_index(); ++n)
            out << n << "," << format_number(u[n]) << "," << format_number(d.v[n]) << ","
                << format_number(d.w[n]) << "," << witness_string(d.witnesses[static_cast<std::size_t>(n - 1)])
                << "\n";
    } else {
        json result = {{"decomposition",
                        {{"v", to_json(d.v.values())},
                         {"w", to_json(d.w.values())},
                         {"epsilon_star", d.epsilon_star},
                         {"witnesses", witnesses_json(d.witnesses)}}}};
        out << envelope("decompose", u, opts, std::move(result)).dump(2) << "\n";
    }
    return 0;
}

int cmd_check_subadd(const Sequence& u, const GlobalOptions& opts, std::optional<double> eps, std::ostream& out)
{
    const double measured = epsilon_star(u);
    bool holds;
    SubadditivityCheck pairwise;
    if (eps) {
        holds = is_approx_subadditive(u, *eps);
    } else {
        pairwise = is_subadditive_pairwise(u, opts.tolerance());
        holds = pairwise.ok;
    }
    if (opts.fmt() == Format::csv) {
        out << "key,value\n"
            << "mode," << (eps ? "approximate" : "pairwise") << "\n"
            << "holds," << boolstr(holds) << "\n"
            << "epsilon_star," << format_number(measured) << "\n";
        if (eps)
            out << "epsilon," << format_number(*eps) << "\n";
        out << "# violations\nm,n\n";
        for (auto [m, n] : pairwise.violations)
            out << m << "," << n << "\n";
    } else {
        json violations = json::array();
        for (auto [m, n] : pairwise.violations)
            violations.push_back({m, n});
        json result = {{"subadditivity",
                        {{"mode", eps ? "approximate" : "pairwise"},
                         {"epsilon", eps ? json(*eps) : json(nullptr)},
                         {"holds", holds},
                         {"epsilon_star", measured},
                         {"violations", violations}}}};
        out << envelope("check-subadd", u, opts, std::move(result)).dump(2) << "\n";
    }
    return holds ? 0 : 1;
}

std::string one_line(std::string s)
{
    for (char& c : s)
        if (c == '\n' || c == '\r')
            c = ' ';
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    return s;
}

} // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Convexity and subadditivity analysis of finite sequences", std::string(kToolName)};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--abs-tol", opts.abs_tol, "absolute tolerance")->check(CLI::NonNegativeNumber);
    app.add_option("--rel-tol", opts.rel_tol, "relative tolerance")->check(CLI::NonNegativeNumber);
    auto* fmt_opt = app.add_option("--format", opts.format, "report style")->check(CLI::IsMember({"json", "csv"}));

    std::string file;
    int samples = 16;
    std::string out_v, out_w;
    std::optional<double> eps;

    auto add = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "sequence file (CSV or JSON)")->required();
        return sub;
    };
    auto* check_convex = add("check-convex", "three-way convexity certificate");
    auto* support = add("support", "monotone support sequence");
    auto* spline = add("spline", "local quadratic pieces and plot samples");
    spline->add_option("--samples", samples, "samples per unit interval");
    auto* lagrange = add("lagrange", "global interpolating polynomial");
    auto* hull = add("hull", "subadditive minorant with witness partitions");
    auto* epsilon = add("epsilon", "minimal stability parameter");
    auto* decomp = add("decompose", "split into subadditive part and bounded remainder");
    decomp->add_option("--out-v", out_v, "write v to this file");
    decomp->add_option("--out-w", out_w, "write w to this file");
    auto* check_subadd = add("check-subadd", "pairwise or approximate subadditivity");
    check_subadd->add_option("--eps", eps, "tolerance epsilon for approximate mode");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << kToolName << ": " << one_line(e.what()) << "\n";
        return 2;
    }
    opts.format_given = fmt_opt->count() > 0;

    try {
        const Sequence u = read_sequence_file(file);
        if (*check_convex)
            return cmd_check_convex(u, opts, out);
        if (*support)
            return cmd_support(u, opts, out);
        if (*spline)
            return cmd_spline(u, opts, samples, out);
        if (*lagrange)
            return cmd_lagrange(u, opts, out, err);
        if (*hull)
            return cmd_hull(u, opts, out);
        if (*epsilon)
            return cmd_epsilon(u, opts, out);
        if (*decomp)
            return cmd_decompose(u, opts, out_v, out_w, out);
        if (*check_subadd) {
            if (eps && !(*eps >= 0))
                throw Error("--eps must be nonnegative");
            return cmd_check_subadd(u, opts, eps, out);
        }
    } catch (const std::exception& e) {
        err << kToolName << ": " << one_line(e.what()) << "\n";
        return 2;
    }
    return 2;
}

} // namespace discseq
