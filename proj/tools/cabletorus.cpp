// Command line front end. Subcommands wrap the library one to one; all
// machine formats live in json_io.hpp / dot.hpp so identical invocations
// print identical bytes. Exit codes: 0 success, 1 domain error (bad slopes,
// bad JSON, precondition violations, reported on stderr without a stack
// trace), 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include <cabletorus/cables.hpp>
#include <cabletorus/classify.hpp>
#include <cabletorus/dot.hpp>
#include <cabletorus/json_io.hpp>
#include <cabletorus/paths.hpp>
#include <cabletorus/ribbon.hpp>
#include <cabletorus/slope.hpp>

namespace {

using cabletorus::BigInt;
using cabletorus::DecoratedPath;
using cabletorus::json;
using cabletorus::Slope;

bool use_color() {
    const char* env = std::getenv("CABLETORUS_COLOR");
    std::string mode = env ? env : "auto";
    if (mode == "always") return true;
    if (mode == "never") return false;
    if (mode == "auto") return isatty(fileno(stdout)) != 0;
    throw CLI::ValidationError("CABLETORUS_COLOR must be auto, always, or never");
}

std::string paint(const std::string& text, const char* code, bool color) {
    if (!color) return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string verdict_text(cabletorus::Verdict v, bool color) {
    switch (v) {
        case cabletorus::Verdict::universally_tight:
            return paint(to_string(v), "32", color);
        case cabletorus::Verdict::virtually_overtwisted:
            return paint(to_string(v), "33", color);
        case cabletorus::Verdict::overtwisted:
            return paint(to_string(v), "31", color);
    }
    return to_string(v);
}

std::string read_input(const std::string& source) {
    std::ostringstream text;
    if (source == "-") {
        text << std::cin.rdbuf();
    } else {
        std::ifstream in(source);
        if (!in) throw std::domain_error("cannot read file " + source);
        text << in.rdbuf();
    }
    return text.str();
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::domain_error(std::string("invalid JSON: ") + e.what());
    }
}

std::string vertices_text(const cabletorus::VertexPath& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += " -> ";
        out += to_string(vs[i]);
    }
    return out;
}

std::string signs_text(const DecoratedPath& d) {
    std::string out;
    for (cabletorus::Sign s : d.signs) out += to_char(s);
    return out;
}

std::string blocks_text(const cabletorus::VertexPath& vs) {
    std::string out;
    for (const cabletorus::JumpRange& blk : cabletorus::cf_blocks(vs).blocks) {
        if (!out.empty()) out += ' ';
        out += '[' + std::to_string(blk.first);
        if (blk.last != blk.first) out += '-' + std::to_string(blk.last);
        out += ']';
    }
    return out;
}

std::string cable_text(const cabletorus::CableRecord& r) {
    return "(" + r.p.str() + "," + r.q.str() + ")";
}

DecoratedPath path_from_args(const std::string& vertices_csv, const std::string& signs,
                             bool truncated) {
    DecoratedPath d;
    std::string piece;
    std::istringstream in(vertices_csv);
    while (std::getline(in, piece, ',')) {
        while (!piece.empty() && piece.front() == ' ') piece.erase(piece.begin());
        while (!piece.empty() && piece.back() == ' ') piece.pop_back();
        d.vertices.push_back(cabletorus::parse_slope(piece));
    }
    for (char c : signs) d.signs.push_back(cabletorus::parse_sign(c));
    d.truncated = truncated;
    return d;
}

DecoratedPath load_path(const std::string& source, const std::string& vertices_csv,
                        const std::string& signs, bool truncated) {
    if (!vertices_csv.empty()) return path_from_args(vertices_csv, signs, truncated);
    if (source.empty())
        throw CLI::ValidationError("provide a JSON file (or -) or --vertices");
    return cabletorus::path_from_json(parse_json_text(read_input(source)));
}

void print_witness(const std::optional<DecoratedPath>& w) {
    if (!w) {
        std::cout << "witness: none\n";
        return;
    }
    std::cout << "witness: " << vertices_text(w->vertices)
              << (w->truncated ? " (truncated)" : "") << "\n";
    std::cout << "signs: " << signs_text(*w) << "\n";
}

// DOT source to SVG via an external renderer; DOT text when none is found.
void render_dot(const std::string& dot_source, const std::string& out_file) {
    bool have_dot = std::system("command -v dot > /dev/null 2>&1") == 0;
    if (!have_dot) {
        if (out_file.empty()) {
            std::cout << dot_source;
        } else {
            std::ofstream out(out_file);
            if (!out) throw std::domain_error("cannot write file " + out_file);
            out << dot_source;
        }
        std::cerr << "note: graphviz 'dot' not found; emitting DOT source\n";
        return;
    }
    char tmp_name[] = "/tmp/cabletorus-XXXXXX";
    int fd = mkstemp(tmp_name);
    if (fd < 0) throw std::domain_error("cannot create a temporary file");
    {
        std::ofstream tmp(tmp_name);
        tmp << dot_source;
    }
    close(fd);
    std::string cmd = "dot -Tsvg '" + std::string(tmp_name) + "'";
    if (!out_file.empty()) {
        if (out_file.find('\'') != std::string::npos)
            throw std::domain_error("output path must not contain a quote");
        cmd += " -o '" + out_file + "'";
    }
    int rc = std::system(cmd.c_str());
    std::remove(tmp_name);
    if (rc != 0) throw std::domain_error("graphviz 'dot' failed");
}

int dispatch(int argc, char** argv) {
    bool color = false;  // resolved after flag parsing so bad env still usage-errors

    CLI::App app{"Farey path, tight contact structure, cable, and ribbon disk toolkit"};
    app.require_subcommand(1);

    // farey-path
    std::string fp_from, fp_to;
    bool fp_json = false, fp_dot = false;
    CLI::App* farey = app.add_subcommand("farey-path", "Minimal clockwise Farey path");
    farey->add_option("from", fp_from, "start slope (q/p or inf)")->required();
    farey->add_option("to", fp_to, "end slope")->required();
    CLI::Option* fp_json_opt = farey->add_flag("--json", fp_json, "emit the path as JSON");
    farey->add_flag("--dot", fp_dot, "emit the path as DOT")->excludes(fp_json_opt);
    farey->callback([&] {
        cabletorus::VertexPath path =
            cabletorus::minimal_path(cabletorus::parse_slope(fp_from),
                                     cabletorus::parse_slope(fp_to));
        if (fp_json) {
            std::cout << cabletorus::path_to_json(path).dump() << "\n";
        } else if (fp_dot) {
            std::cout << cabletorus::path_to_dot(path);
        } else {
            std::cout << vertices_text(path) << "\n";
            std::cout << "jumps: " << path.size() - 1;
            if (path.size() > 1) std::cout << "  blocks: " << blocks_text(path);
            std::cout << "\n";
        }
    });

    // classify
    std::string cl_source, cl_vertices, cl_signs;
    bool cl_truncated = false, cl_json = false, cl_audit = false;
    CLI::App* cls = app.add_subcommand("classify", "Classify a decorated path");
    cls->add_option("input", cl_source, "JSON path file, or - for stdin");
    cls->add_option("--vertices", cl_vertices, "comma separated slopes");
    cls->add_option("--signs", cl_signs, "sign characters, e.g. +-");
    cls->add_flag("--truncated", cl_truncated, "first jump undecorated");
    cls->add_flag("--json", cl_json, "emit JSON");
    cls->add_flag("--audit", cl_audit, "also compare against strict-universal semantics");
    cls->callback([&] {
        DecoratedPath d = load_path(cl_source, cl_vertices, cl_signs, cl_truncated);
        if (cl_audit) {
            cabletorus::ClassifyAudit audit = cabletorus::classify_audit(d);
            if (cl_json) {
                std::cout << cabletorus::audit_to_json(audit).dump() << "\n";
                return;
            }
            std::cout << "verdict: " << verdict_text(audit.existential.verdict, color) << "\n";
            print_witness(audit.existential.canonical_witness);
            std::cout << "strict-universal tight: " << (audit.strict_universal ? "yes" : "no")
                      << "\n";
            std::cout << "modes disagree: " << (audit.modes_disagree ? "yes" : "no") << "\n";
            return;
        }
        cabletorus::ContactClass c = cabletorus::classify(d);
        if (cl_json) {
            std::cout << cabletorus::contact_class_to_json(c).dump() << "\n";
            return;
        }
        std::cout << "verdict: " << verdict_text(c.verdict, color) << "\n";
        print_witness(c.canonical_witness);
    });

    // count-torus
    std::string ct_meridian, ct_slope;
    bool ct_json = false;
    CLI::App* ctorus = app.add_subcommand(
        "count-torus", "Count tight structures on a solid torus with two dividing curves");
    ctorus->add_option("--meridian", ct_meridian, "meridian slope")->required();
    ctorus->add_option("--slope", ct_slope, "boundary dividing slope")->required();
    ctorus->add_flag("--json", ct_json, "emit JSON");
    auto count_lines = [&color](std::size_t count, std::size_t ut, bool as_json) {
        if (as_json) {
            std::cout << cabletorus::count_to_json(count, ut).dump() << "\n";
            return;
        }
        std::cout << count << " tight contact structure" << (count == 1 ? "" : "s") << " ("
                  << paint(std::to_string(ut), "32", color) << " universally tight)\n";
    };
    ctorus->callback([&] {
        std::vector<cabletorus::ContactClass> classes = cabletorus::enumerate_tight_solid_torus(
            cabletorus::parse_slope(ct_meridian),
            cabletorus::TorusBoundary{cabletorus::parse_slope(ct_slope), 2});
        std::size_t ut = 0;
        for (const cabletorus::ContactClass& c : classes)
            if (c.verdict == cabletorus::Verdict::universally_tight) ++ut;
        count_lines(classes.size(), ut, ct_json);
    });

    // count-t2xi
    std::string tt_from, tt_to;
    bool tt_json = false;
    CLI::App* t2xi = app.add_subcommand(
        "count-t2xi", "Count tight structures on a thickened torus with two dividing curves");
    t2xi->add_option("--from", tt_from, "back boundary dividing slope")->required();
    t2xi->add_option("--to", tt_to, "front boundary dividing slope")->required();
    t2xi->add_flag("--json", tt_json, "emit JSON");
    t2xi->callback([&] {
        std::vector<cabletorus::ContactClass> classes = cabletorus::enumerate_tight_t2xi(
            cabletorus::TorusBoundary{cabletorus::parse_slope(tt_from), 2},
            cabletorus::TorusBoundary{cabletorus::parse_slope(tt_to), 2});
        std::size_t ut = 0;
        for (const cabletorus::ContactClass& c : classes)
            if (c.verdict == cabletorus::Verdict::universally_tight) ++ut;
        count_lines(classes.size(), ut, tt_json);
    });

    // thicken
    std::string th_slope;
    bool th_json = false;
    CLI::App* thicken = app.add_subcommand(
        "thicken", "Thickening of a universally tight solid torus to an integer slope");
    thicken->add_option("slope", th_slope, "boundary slope <= -1")->required();
    thicken->add_flag("--json", th_json, "emit JSON");
    thicken->callback([&] {
        cabletorus::Thickening t =
            cabletorus::universally_tight_thickening(cabletorus::parse_slope(th_slope));
        if (th_json) {
            std::cout << cabletorus::thickening_to_json(t).dump() << "\n";
            return;
        }
        std::cout << th_slope << " thickens to " << to_string(t.target) << "\n";
        std::cout << "path: " << vertices_text(t.path) << "\n";
    });

    // cable
    long long cb_p = 0, cb_q = 0, cb_tb = 0, cb_tw = 0, cb_shear = 0;
    bool cb_json = false;
    CLI::App* cable = app.add_subcommand("cable", "Framing calculus for one cable record");
    cable->add_option("-p", cb_p, "longitude coefficient")->required();
    cable->add_option("-q", cb_q, "meridian coefficient")->required();
    CLI::Option* tb_opt = cable->add_option("--tb", cb_tb, "Thurston-Bennequin invariant");
    CLI::Option* tw_opt =
        cable->add_option("--tw", cb_tw, "torus framing twist")->excludes(tb_opt);
    CLI::Option* shear_opt =
        cable->add_option("--shear", cb_shear, "report the image under a shear");
    cable->add_flag("--json", cb_json, "emit JSON");
    cable->callback([&] {
        if (!*tb_opt && !*tw_opt) throw CLI::ValidationError("provide --tb or --tw");
        cabletorus::CableRecord r{BigInt(cb_p), BigInt(cb_q), BigInt(0)};
        r.tb = *tb_opt ? BigInt(cb_tb)
                       : cabletorus::tb_from_tw(BigInt(cb_tw), r.p, r.q);
        cabletorus::validate(r);
        BigInt tw = cabletorus::tw_from_tb(r.tb, r.p, r.q);
        bool trivial = cabletorus::is_trivial_cable(r);
        std::optional<std::pair<BigInt, BigInt>> image;
        if (*shear_opt)
            image = cabletorus::contacto_image(r.p, r.q, BigInt(cb_shear));
        if (cb_json) {
            json out = cabletorus::cable_to_json(r);
            out["tw"] = cabletorus::detail::int_to_json(tw);
            out["slope"] = to_string(cabletorus::cable_slope(r));
            out["trivial"] = trivial;
            out["large"] = trivial ? json(nullptr) : json(cabletorus::is_large(r));
            if (image)
                out["image"] = json::array({cabletorus::detail::int_to_json(image->first),
                                            cabletorus::detail::int_to_json(image->second)});
            std::cout << out.dump() << "\n";
            return;
        }
        std::cout << "cable " << cable_text(r) << ": tb = " << r.tb.str()
                  << ", tw = " << tw.str()
                  << ", slope = " << to_string(cabletorus::cable_slope(r)) << "\n";
        if (trivial)
            std::cout << "trivial: yes (|p| = 1)\n";
        else
            std::cout << "large: " << (cabletorus::is_large(r) ? "yes" : "no") << "\n";
        if (image)
            std::cout << "shear image (k = " << cb_shear << "): (" << image->first.str()
                      << "," << image->second.str() << ")\n";
    });

    // yasui
    long long ys_m = 0;
    bool ys_json = false;
    CLI::App* yasui = app.add_subcommand(
        "yasui", "Cable family of a twist knot refuting uniform thickness");
    yasui->add_option("-m", ys_m, "twist parameter, m <= -5")->required();
    yasui->add_flag("--json", ys_json, "emit JSON");
    yasui->callback([&] {
        cabletorus::KnotProfile profile = cabletorus::yasui_family(BigInt(ys_m));
        cabletorus::LlcReport report = cabletorus::llc_report(profile);
        if (ys_json) {
            json out;
            out["profile"] = cabletorus::profile_to_json(profile);
            out["llc"] = cabletorus::llc_to_json(report);
            std::cout << out.dump() << "\n";
            return;
        }
        std::cout << "family m = " << ys_m << "  (tb_max = " << profile.tb_max.str() << ")\n";
        for (const cabletorus::CableRecord& r : profile.cables)
            std::cout << "  n = " << r.p.str() << ": cable " << cable_text(r)
                      << "  tb = " << r.tb.str()
                      << "  slope = " << to_string(cabletorus::cable_slope(r)) << "\n";
        if (report.width)
            std::cout << "width >= " << to_string(report.width->lower_bound) << "\n";
        if (report.llc) {
            std::cout << paint("not uniformly thick", "31", color) << ": witness cable "
                      << cable_text(report.witnesses.front())
                      << ", virtually overtwisted non-thickenable torus\n";
        } else {
            std::cout << "no largeness witness among the recorded cables\n";
        }
    });

    // ut-test
    std::string ut_source;
    bool ut_json = false;
    CLI::App* ut = app.add_subcommand(
        "ut-test", "One-sided uniform thickness test on a knot profile");
    ut->add_option("input", ut_source, "JSON profile file, or - for stdin")->required();
    ut->add_flag("--json", ut_json, "emit JSON");
    ut->callback([&] {
        cabletorus::KnotProfile profile =
            cabletorus::profile_from_json(parse_json_text(read_input(ut_source)));
        cabletorus::UniformThicknessVerdict v = cabletorus::uniform_thickness_test(profile);
        if (ut_json) {
            std::cout << cabletorus::ut_verdict_to_json(v).dump() << "\n";
            return;
        }
        std::cout << "refuted: " << (v.refuted ? "yes" : "no") << "\n";
        if (v.witness)
            std::cout << "witness: cable " << cable_text(*v.witness)
                      << " with tb = " << v.witness->tb.str() << "\n";
        if (v.only_trivial_cables) std::cout << "note: only trivial cables supplied\n";
    });

    // ribbon-simplify
    std::string rb_source;
    bool rb_json = false, rb_dot = false;
    CLI::App* ribbon = app.add_subcommand(
        "ribbon-simplify", "Cut and slide a ribbon disk presentation to nothing");
    ribbon->add_option("input", rb_source, "JSON presentation file, or - for stdin")
        ->required();
    CLI::Option* rb_json_opt = ribbon->add_flag("--json", rb_json, "emit the trace as JSON");
    ribbon->add_flag("--dot", rb_dot, "emit the dual graph as DOT")->excludes(rb_json_opt);
    ribbon->callback([&] {
        cabletorus::RibbonPresentation r =
            cabletorus::ribbon_from_json(parse_json_text(read_input(rb_source)));
        cabletorus::SimplificationTrace t = cabletorus::simplify(r);
        cabletorus::DualGraphCertificate cert = cabletorus::dual_graph_certificate(t);
        cabletorus::HandlebodySummary hs = cabletorus::handlebody_summary(t, r.framings);
        if (rb_dot) {
            std::cout << cabletorus::dual_graph_to_dot(t);
            return;
        }
        if (rb_json) {
            json out = cabletorus::trace_to_json(t);
            out["peel_order"] = cert.peel_order;
            out["handlebody"] = cabletorus::handlebody_to_json(hs);
            std::cout << out.dump() << "\n";
            return;
        }
        std::cout << "n = " << t.n << "\n";
        std::cout << "moves:\n";
        for (const cabletorus::Move& m : t.moves) {
            if (m.kind == cabletorus::Move::Kind::cut)
                std::cout << "  cut c" << m.id << " (new piece " << m.piece << ")\n";
            else
                std::cout << "  slide beta " << m.id << " (alpha on " << m.piece << ")\n";
        }
        std::cout << "cuts: " << t.cuts << "  pieces: " << t.pieces << "\n";
        if (!cert.peel_order.empty()) {
            std::cout << "dual tree peel:";
            for (const std::string& p : cert.peel_order) std::cout << " " << p;
            std::cout << "\n";
        }
        if (hs.unknot_without_handles) {
            std::cout << "boundary is an unknot; no handles\n";
            return;
        }
        std::cout << "handle pairs: " << hs.handle_pairs << "\n";
        std::cout << "framings:";
        for (const auto& [cut, f] : hs.framings) std::cout << " c" << cut << " = " << f;
        std::cout << "\n";
        if (hs.parity_adjustments.empty()) {
            std::cout << "parity adjustments: none\n";
        } else {
            std::cout << "parity adjustments:";
            for (const cabletorus::ParityAdjustment& a : hs.parity_adjustments)
                std::cout << " c" << a.cut_id << ": " << a.from << " -> " << a.to;
            std::cout << "\n";
        }
    });

    // render
    CLI::App* render = app.add_subcommand(
        "render", "Render DOT output as SVG when graphviz is available");
    render->require_subcommand(1);
    std::string rd_from, rd_to, rd_ribbon_source, rd_out;
    CLI::App* rd_path = render->add_subcommand("path", "render a Farey path");
    rd_path->add_option("from", rd_from, "start slope")->required();
    rd_path->add_option("to", rd_to, "end slope")->required();
    rd_path->add_option("-o,--out", rd_out, "output file (SVG, or DOT fallback)");
    rd_path->callback([&] {
        render_dot(cabletorus::path_to_dot(cabletorus::minimal_path(
                       cabletorus::parse_slope(rd_from), cabletorus::parse_slope(rd_to))),
                   rd_out);
    });
    CLI::App* rd_ribbon = render->add_subcommand("ribbon", "render a dual graph");
    rd_ribbon->add_option("input", rd_ribbon_source, "JSON presentation file, or - for stdin")
        ->required();
    rd_ribbon->add_option("-o,--out", rd_out, "output file (SVG, or DOT fallback)");
    rd_ribbon->callback([&] {
        cabletorus::RibbonPresentation r =
            cabletorus::ribbon_from_json(parse_json_text(read_input(rd_ribbon_source)));
        render_dot(cabletorus::dual_graph_to_dot(cabletorus::simplify(r)), rd_out);
    });

    try {
        color = use_color();
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
