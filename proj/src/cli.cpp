#include "moebius/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "moebius/forest.hpp"
#include "moebius/pair_classifier.hpp"
#include "moebius/render.hpp"

namespace moebius::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kCalkinWilfLeft = "1 1 0 1";
constexpr const char* kCalkinWilfRight = "1 0 1 1";

struct Options {
    std::string left = kCalkinWilfLeft;
    std::string right = kCalkinWilfRight;
    std::string mode = "interior";
    bool pretty = false;

    std::string pair_a, pair_b;
    std::string matrix;
    std::string vertex;
    std::string word;
    unsigned depth = 3;
    unsigned max_entry = 1;
    unsigned threads = 1;
    std::optional<std::uint64_t> max_steps;
    std::string x_max = "4";
    std::string y_max = "2";
    std::string out_path;
};

ForestConfig make_config(const Options& o)
{
    return ForestConfig(Matrix::parse(o.left), Matrix::parse(o.right), parse_mode(o.mode));
}

std::uint64_t resolve_max_steps(const Options& o)
{
    if (o.max_steps) return *o.max_steps;
    if (const char* env = std::getenv("MOEBIUS_MAX_STEPS")) {
        std::string s(env);
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw ParseError("MOEBIUS_MAX_STEPS must be a positive integer, got '" + s + "'");
        return std::stoull(s);
    }
    return kDefaultMaxSteps;
}

int check_pair(const Options& o, std::ostream& out)
{
    Matrix A = Matrix::parse(o.pair_a.empty() ? o.left : o.pair_a);
    Matrix B = Matrix::parse(o.pair_b.empty() ? o.right : o.pair_b);
    bool pair = is_left_right_pair(A, B);
    PairVerdict v = disjointness_oracle(A, B);
    if (v.is_pair != pair) throw InternalError("predicate and oracle disagree on " + A.to_string() + ", " + B.to_string());
    Slice sa = slice_of(A), sb = slice_of(B);
    if (o.pretty) {
        out << "A = (" << A << "), slice " << sa << "\n"
            << "B = (" << B << "), slice " << sb << "\n"
            << "left-right pair: " << (pair ? "yes" : "no") << "\n";
        if (v.witness) out << "common point: " << *v.witness << "\n";
    } else {
        Json j;
        j["pair"] = pair;
        j["A"] = A.to_string();
        j["B"] = B.to_string();
        j["slices"] = {sa.to_string(), sb.to_string()};
        j["witness"] = v.witness ? Json(v.witness->to_string()) : Json(nullptr);
        out << j.dump() << "\n";
    }
    return pair ? kOk : kNotPair;
}

int slice_cmd(const Options& o, std::ostream& out)
{
    Matrix M = Matrix::parse(o.matrix.empty() ? o.left : o.matrix);
    Slice s = slice_of(M);
    if (o.pretty) {
        out << "M(D) = " << s << ", diam " << diam(s) << "\n";
    } else {
        Json j;
        j["matrix"] = M.to_string();
        j["slice"] = s.to_string();
        j["diam"] = diam(s).to_string();
        out << j.dump() << "\n";
    }
    return kOk;
}

int root_cmd(const Options& o, std::ostream& out)
{
    ForestConfig cfg = make_config(o);
    Vertex v = Vertex::parse(o.vertex, cfg.mode());
    RootResult r = find_root(cfg, v, resolve_max_steps(o));
    if (o.pretty) {
        out << v.to_string() << " = " << (r.word.empty() ? "" : r.word.to_string() + " applied to ") << r.root.to_string()
            << " (" << r.steps << " steps)\n";
    } else {
        Json j;
        j["root"] = r.root.to_string();
        j["word"] = r.word.to_string();
        j["steps"] = r.steps;
        out << j.dump() << "\n";
    }
    return kOk;
}

int descend_cmd(const Options& o, std::ostream& out)
{
    ForestConfig cfg = make_config(o);
    Vertex v = Vertex::parse(o.vertex, cfg.mode());
    Vertex w = descend(cfg, v, PathWord::parse(o.word));
    Json j;
    j["vertex"] = w.to_string();
    out << (o.pretty ? w.to_string() : j.dump()) << "\n";
    return kOk;
}

int enumerate_cmd(const Options& o, std::ostream& out)
{
    ForestConfig cfg = make_config(o);
    Vertex root = Vertex::parse(o.vertex, cfg.mode());
    for (const TreeNode& n : enumerate_tree(cfg, root, o.depth)) {
        if (o.pretty) {
            out << (n.word.empty() ? "-" : n.word.to_string()) << "\t" << n.vertex.to_string() << "\n";
            continue;
        }
        Json j;
        j["word"] = n.word.to_string();
        j["vertex"] = n.vertex.to_string();
        out << j.dump() << "\n";
    }
    return kOk;
}

int verify_cmd(const Options& o, std::ostream& out)
{
    std::vector<Matrix> ms = enumerate_sl2n(o.max_entry);
    VerifyReport r = verify_pairs(ms, o.threads);
    for (const PairMismatch& m : r.mismatches) {
        Json j;
        j["A"] = ms[m.first].to_string();
        j["B"] = ms[m.second].to_string();
        j["predicate"] = m.predicate;
        j["oracle"] = m.oracle;
        j["witness"] = m.witness ? Json(m.witness->to_string()) : Json(nullptr);
        out << j.dump() << "\n";
    }
    Json s;
    s["matrices"] = r.matrices;
    s["pairs_checked"] = r.pairs_checked;
    s["pairs_found"] = r.pairs_found;
    s["mismatches"] = r.mismatches.size();
    s["bad_witnesses"] = r.bad_witnesses;
    out << (o.pretty ? s.dump(2) : s.dump()) << "\n";
    return r.mismatches.empty() && r.bad_witnesses == 0 ? kOk : kNotPair;
}

int render_cmd(const Options& o, std::ostream& out)
{
    ForestConfig cfg = make_config(o);
    RenderSpec spec;
    spec.depth = o.depth;
    spec.x_max = parse_rational(o.x_max);
    spec.y_max = parse_rational(o.y_max);
    std::string svg = render_svg(cfg, spec);
    if (o.out_path.empty()) {
        out << svg;
        return kOk;
    }
    std::ofstream file(o.out_path);
    if (!(file << svg)) throw ParseError("cannot write '" + o.out_path + "'");
    Json j;
    j["out"] = o.out_path;
    j["geodesics"] = words_up_to(o.depth).size();
    out << j.dump() << "\n";
    return kOk;
}

void add_forest_flags(CLI::App* sub, Options& o)
{
    sub->add_option("--left", o.left, "L as \"a b c d\"")->capture_default_str();
    sub->add_option("--right", o.right, "R as \"a b c d\"")->capture_default_str();
    sub->add_option("--mode", o.mode, "interior | boundary")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Left-right pairs of SL2(N0) Moebius transformations and their forests"};
    app.require_subcommand(1);
    app.add_flag("--pretty", o.pretty, "Human-readable output instead of JSON");

    auto* check = app.add_subcommand("check-pair", "Decide whether two matrices form a left-right pair");
    check->add_option("A", o.pair_a, "first matrix \"a b c d\"");
    check->add_option("B", o.pair_b, "second matrix \"a b c d\"");
    check->add_option("--left", o.left, "first matrix when A is not given");
    check->add_option("--right", o.right, "second matrix when B is not given");

    auto* slice = app.add_subcommand("slice", "Endpoints and diameter of M(D)");
    slice->add_option("M", o.matrix, "matrix \"a b c d\"");
    slice->add_option("--left", o.left, "matrix when M is not given");

    auto* root = app.add_subcommand("root", "Find the root of a vertex's tree");
    add_forest_flags(root, o);
    root->add_option("vertex", o.vertex, "vertex, e.g. 3/2+1/1i or 3/5")->required();
    root->add_option("--max-steps", o.max_steps, "step guard (default 2^20, or MOEBIUS_MAX_STEPS)")
        ->check(CLI::PositiveNumber);

    auto* desc = app.add_subcommand("descend", "Apply a path word to a vertex");
    add_forest_flags(desc, o);
    desc->add_option("vertex", o.vertex)->required();
    desc->add_option("word", o.word, "word over {L, R}, outermost first");

    auto* enumerate = app.add_subcommand("enumerate", "Level-order listing of a tree");
    add_forest_flags(enumerate, o);
    enumerate->add_option("root", o.vertex)->required();
    enumerate->add_option("--depth", o.depth)->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Compare the closed-form predicate with the slice oracle");
    verify->add_option("--max-entry", o.max_entry)->capture_default_str();
    verify->add_option("--threads", o.threads)->capture_default_str();

    auto* render = app.add_subcommand("render", "SVG of the slices of all words up to a depth");
    render->add_option("--left", o.left)->capture_default_str();
    render->add_option("--right", o.right)->capture_default_str();
    render->add_option("--depth", o.depth)->capture_default_str();
    render->add_option("--x-max", o.x_max)->capture_default_str();
    render->add_option("--y-max", o.y_max)->capture_default_str();
    render->add_option("--out", o.out_path, "output file (stdout when omitted)");

    // CLI11 consumes its argument vector from the back; drop the program name.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }

    try {
        if (check->parsed()) return check_pair(o, out);
        if (slice->parsed()) return slice_cmd(o, out);
        if (root->parsed()) return root_cmd(o, out);
        if (desc->parsed()) return descend_cmd(o, out);
        if (enumerate->parsed()) return enumerate_cmd(o, out);
        if (verify->parsed()) return verify_cmd(o, out);
        if (render->parsed()) return render_cmd(o, out);
    } catch (const GuardExhausted& e) {
        err << "error: " << e.what() << "\n";
        return kGuard;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}

}  // namespace moebius::cli
