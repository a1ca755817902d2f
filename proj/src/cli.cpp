#include "skewlab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "skewlab/classifier.hpp"
#include "skewlab/diagram_ops.hpp"
#include "skewlab/error.hpp"
#include "skewlab/invariants.hpp"
#include "skewlab/json_io.hpp"
#include "skewlab/staircase.hpp"
#include "skewlab/symfunc.hpp"

namespace skewlab::cli {

int max_cells() {
    if (const char* env = std::getenv("SKEWLAB_MAX_CELLS"); env && *env) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return 12;
}

namespace {

// Diagram arguments: "@path" reads the text from a file; in ascii mode ';'
// also separates rows.
SkewShape read_diagram(const std::string& arg, const std::string& format) {
    std::string text = arg;
    if (!text.empty() && text.front() == '@') {
        std::ifstream in(text.substr(1));
        if (!in) fail(ErrorKind::ParseError, "cannot open " + text.substr(1));
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    if (format == "ascii") {
        std::replace(text.begin(), text.end(), ';', '\n');
        return parse_ascii(text);
    }
    return parse_compact(text);
}

Composition read_composition(std::string text) {
    std::erase_if(text, [](char c) { return c == '(' || c == ')' || c == '[' || c == ']' || c == ' '; });
    std::vector<int> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || v <= 0) fail(ErrorKind::ParseError, "bad composition part '" + item + "'");
        parts.push_back(v);
    }
    if (parts.empty()) fail(ErrorKind::ParseError, "empty composition");
    return Composition(std::move(parts));
}

Side read_side(const std::string& s) { return s == "nw" ? Side::nw : Side::se; }

void print_shape(std::ostream& out, const SkewShape& d, const std::string& format) {
    if (format == "compact")
        out << d.compact() << "\n";
    else
        out << d.ascii() << (d.ascii().empty() || d.ascii().back() != '\n' ? "\n" : "");
}

template <class Tag>
void print_table(std::ostream& out, const SparseVector<Tag>& f, const std::string& letter) {
    if (f.empty()) {
        out << "0\n";
        return;
    }
    for (const auto& [key, c] : f.terms()) out << c << "\t" << letter << key.str() << "\n";
}

struct Options {
    std::string a, b, in = "compact", out = "table", algo = "lr", basis, side = "se", format = "ascii";
    std::string alpha, beta, omega, nesting, report_path;
    int m = 1, k = 2, n = 0, r = 2;
    unsigned jobs = 1;
    bool all = false;
};

int do_expand(const Options& o, std::ostream& out) {
    const SkewShape d = read_diagram(o.a, o.in);
    if (o.algo == "jt" && o.basis != "schur") {
        const HPolynomial h = jacobi_trudi(d);
        if (o.out == "json")
            out << to_json(h).dump() << "\n";
        else
            print_table(out, h, "h");
        return exit_ok;
    }
    SchurVector s;
    if (o.algo == "lr")
        s = schur_expand_lr(d);
    else if (o.algo == "jt")
        s = to_schur(jacobi_trudi(d));
    else
        s = schur_expand_hg(d, read_side(o.side));
    if (o.out == "json")
        out << to_json(s).dump() << "\n";
    else
        print_table(out, s, "s");
    return exit_ok;
}

int do_equal(const Options& o, std::ostream& out) {
    const bool eq = fingerprint(read_diagram(o.a, o.in)) == fingerprint(read_diagram(o.b, o.in));
    if (o.out == "json")
        out << Json{{"equivalent", eq}}.dump() << "\n";
    else
        out << "equivalent: " << (eq ? "true" : "false") << "\n";
    return exit_ok;
}

int do_invariants(const Options& o, std::ostream& out) {
    const SkewShape d = read_diagram(o.a, o.in);
    const Json j = invariants_to_json(d);
    if (o.all || o.out == "json") {
        out << j.dump() << "\n";
        return exit_ok;
    }
    const OverlapProfile p = overlaps(d);
    out << "rank\t" << j["rank"].get<int>() << "\n";
    for (std::size_t k = 0; k < p.row_parts.size(); ++k) out << "rho" << k + 1 << "\t" << p.row_parts[k].str() << "\n";
    for (std::size_t k = 0; k < p.col_parts.size(); ++k) out << "gamma" << k + 1 << "\t" << p.col_parts[k].str() << "\n";
    return exit_ok;
}

int do_op(const std::string& verb, const Options& o, std::ostream& out) {
    auto diagram = [&](const std::string& arg, const char* name) {
        if (arg.empty()) fail(ErrorKind::InvalidArgument, std::string("missing --") + name);
        return read_diagram(arg, o.in);
    };
    SkewShape result;
    if (verb == "concat") {
        result = concat(diagram(o.a, "a"), diagram(o.b, "b"));
    } else if (verb == "nearcat") {
        result = near_concat(diagram(o.a, "a"), diagram(o.b, "b"));
    } else if (verb == "compose") {
        if (!o.alpha.empty())
            result = compose_alpha_D(read_composition(o.alpha), diagram(o.a, "a"));
        else if (!o.beta.empty())
            result = compose_D_beta(diagram(o.a, "a"), read_composition(o.beta));
        else
            fail(ErrorKind::InvalidArgument, "compose needs --alpha or --beta");
    } else if (verb == "amalgamate") {
        if (o.omega.empty()) fail(ErrorKind::InvalidArgument, "amalgamate needs --omega");
        const Composition omega = read_composition(o.omega);
        if (!o.alpha.empty())
            result = amalgamated_compose(read_composition(o.alpha), diagram(o.a, "a"), omega);
        else
            result = amalgamate(diagram(o.a, "a"), diagram(o.b, "b"), omega);
    } else if (verb == "staircase") {
        if (o.alpha.empty()) fail(ErrorKind::InvalidArgument, "staircase needs --alpha");
        const Composition alpha = read_composition(o.alpha);
        if (o.nesting.empty()) {
            result = ribbon_to_shape(staircase(alpha, o.m, o.k));
        } else {
            StaircasePresentation p{alpha, o.m, o.k, Nesting(o.nesting), read_side(o.side)};
            result = build_from_staircase(p);
        }
    } else {  // detect
        const SkewShape d = diagram(o.a, "a");
        const auto p = detect_staircase(d, read_side(o.side));
        if (!p) {
            out << (o.out == "json" ? "null" : "none") << "\n";
            return exit_ok;
        }
        if (o.out == "json") {
            out << Json{{"alpha", p->alpha.vec()}, {"m", p->m}, {"k", p->k}, {"nesting", p->nesting.word()},
                        {"side", p->side == Side::se ? "se" : "nw"}}
                       .dump()
                << "\n";
        } else {
            out << "alpha\t" << p->alpha.str() << "\nm\t" << p->m << "\nk\t" << p->k << "\nnesting\t"
                << p->nesting.spaced() << "\nside\t" << (p->side == Side::se ? "se" : "nw") << "\n";
        }
        return exit_ok;
    }
    print_shape(out, result, o.format);
    return exit_ok;
}

int do_classify(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.n > max_cells()) {
        err << "n=" << o.n << " exceeds SKEWLAB_MAX_CELLS=" << max_cells() << "\n";
        return exit_usage;
    }
    ClassificationReport report = classify(o.n, {o.jobs, true});
    report.sporadics = verify_sporadics(fixture_dir(), false);
    const Json j = to_json(report);
    if (!o.report_path.empty()) {
        std::ofstream file(o.report_path);
        if (!file) fail(ErrorKind::InvalidArgument, "cannot write " + o.report_path);
        file << j.dump(1) << "\n";
    }
    out << "n\t" << report.n << "\ndiagrams\t" << report.total_diagrams << "\nclasses\t" << report.classes.size() << "\n";
    for (const auto& [size, count] : report.histogram) out << "size " << size << "\t" << count << "\n";
    out << "power-of-two violations\t" << report.power_of_two_violations.size() << "\n";
    return exit_ok;
}

int do_sporadics(const Options& o, std::ostream& out) {
    const auto results = verify_sporadics(fixture_dir(), false);
    bool ok = true;
    Json j = Json::array();
    for (const SporadicResult& r : results) {
        ok = ok && r.equal && r.rotations_equal && r.conjugates_equal;
        j.push_back(to_json(r));
        if (o.out != "json")
            out << "pair" << r.pair_id << "\t" << (r.equal ? "equal" : "DIFFERENT") << "\t" << r.a.compact() << " ~ "
                << r.b.compact() << "\n";
    }
    if (o.out == "json") out << j.dump() << "\n";
    if (!ok) fail(ErrorKind::FixtureMismatch, "a sporadic pair failed to verify");
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Skew Schur function toolkit", args.empty() ? "skewlab" : args.front()};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> in_formats{"compact", "ascii"};
    const std::vector<std::string> out_formats{"table", "json"};

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--in", o.in, "input format")->check(CLI::IsMember(in_formats));
        sub->add_option("--out", o.out, "output format")->check(CLI::IsMember(out_formats));
    };

    auto* expand = app.add_subcommand("expand", "Schur expansion of a skew diagram");
    expand->add_option("--a", o.a, "diagram")->required();
    expand->add_option("--algo", o.algo, "lr, jt or hg")->check(CLI::IsMember({"lr", "jt", "hg"}));
    expand->add_option("--basis", o.basis, "h or schur (jt only)")->check(CLI::IsMember({"h", "schur"}));
    expand->add_option("--side", o.side, "se or nw (hg only)")->check(CLI::IsMember({"se", "nw"}));
    add_io(expand);

    auto* equal = app.add_subcommand("equal", "test skew-equivalence");
    equal->add_option("--a", o.a)->required();
    equal->add_option("--b", o.b)->required();
    add_io(equal);

    auto* inv = app.add_subcommand("invariants", "rank and overlap invariants");
    inv->add_option("--a", o.a)->required();
    inv->add_flag("--all", o.all, "emit every invariant as JSON");
    add_io(inv);

    auto* op = app.add_subcommand("op", "diagram constructions");
    op->require_subcommand(1);
    for (const char* verb : {"concat", "nearcat", "compose", "amalgamate", "staircase", "detect"}) {
        auto* sub = op->add_subcommand(verb);
        sub->add_option("--a", o.a);
        sub->add_option("--b", o.b);
        sub->add_option("--alpha", o.alpha, "composition such as 2,1,3");
        sub->add_option("--beta", o.beta);
        sub->add_option("--omega", o.omega);
        sub->add_option("--m", o.m);
        sub->add_option("--k", o.k);
        sub->add_option("--nesting", o.nesting, "word over . ( ) |");
        sub->add_option("--side", o.side)->check(CLI::IsMember({"se", "nw"}));
        sub->add_option("--format", o.format, "ascii or compact")->check(CLI::IsMember({"ascii", "compact"}));
        add_io(sub);
    }

    auto* cls = app.add_subcommand("classify", "classify connected diagrams of n cells");
    cls->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    cls->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    cls->add_option("--out", o.report_path, "write the JSON report here");

    auto* spor = app.add_subcommand("sporadics", "verify the sporadic fixture pairs");
    spor->add_option("--out", o.out)->check(CLI::IsMember(out_formats));

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return exit_usage;
    }

    try {
        if (expand->parsed()) return do_expand(o, out);
        if (equal->parsed()) return do_equal(o, out);
        if (inv->parsed()) return do_invariants(o, out);
        if (cls->parsed()) return do_classify(o, out, err);
        if (spor->parsed()) return do_sporadics(o, out);
        for (CLI::App* sub : op->get_subcommands())
            if (sub->parsed()) return do_op(sub->get_name(), o, out);
    } catch (const SkewError& e) {
        err << Json{{"error", std::string(e.name())}, {"message", e.what()}}.dump() << "\n";
        return exit_domain_error;
    }
    return exit_usage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    return run(std::vector<std::string>(argv, argv + argc), out, err);
}

} // namespace skewlab::cli
