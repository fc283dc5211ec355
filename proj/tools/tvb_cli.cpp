// Command-line front end: Ehrhart counts, convex-chain computations,
// Klyachko bundle Euler characteristics, chain-vs-Cech verification and
// SVG plots of chain values on lattice points.

#include "tvb/bundle.hpp"
#include "tvb/chain.hpp"
#include "tvb/ehrhart.hpp"
#include "tvb/errors.hpp"
#include "tvb/json_io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace tvb;

LatticeVector parse_weight(const std::string& s) {
    std::vector<Int> c;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) c.emplace_back(Int(tok));
    if (c.empty()) throw std::invalid_argument("empty weight");
    return LatticeVector(std::move(c));
}

struct Box {
    std::vector<Int> lo, hi;
};

Box parse_box(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("box must be lo:hi");
    Box b;
    b.lo = parse_weight(s.substr(0, colon)).c;
    b.hi = parse_weight(s.substr(colon + 1)).c;
    if (b.lo.size() != b.hi.size()) throw std::invalid_argument("box bounds rank mismatch");
    for (size_t i = 0; i < b.lo.size(); ++i)
        if (b.lo[i] > b.hi[i]) throw std::invalid_argument("box lower bound exceeds upper bound");
    return b;
}

std::vector<LatticeVector> box_points(const Box& b) {
    std::vector<LatticeVector> out;
    const int n = static_cast<int>(b.lo.size());
    std::vector<Int> cur(n);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            out.push_back(LatticeVector(std::vector<Int>(cur)));
            return;
        }
        for (Int x = b.lo[i]; x <= b.hi[i]; ++x) {
            cur[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// All output is buffered and written at the very end, so a failure never
// leaves a partial output file behind.
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << text;
}

std::string svg_plot(const ConvexChain& chain, const Box& box) {
    if (chain.rank() != 2 || box.lo.size() != 2)
        throw std::invalid_argument("plot supports rank-2 lattices only");
    const long long cell = 40, margin = 60;
    long long w = (box.hi[0] - box.lo[0]).convert_to<long long>();
    long long h = (box.hi[1] - box.lo[1]).convert_to<long long>();
    auto px = [&](const Int& x) {
        return margin + (x - box.lo[0]).convert_to<long long>() * cell;
    };
    auto py = [&](const Int& y) {
        return margin + (box.hi[1] - y).convert_to<long long>() * cell;
    };
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (2 * margin + w * cell)
        << "\" height=\"" << (2 * margin + h * cell) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (box.lo[0] <= 0 && box.hi[0] >= 0)
        svg << "<line x1=\"" << px(Int(0)) << "\" y1=\"" << py(box.hi[1]) << "\" x2=\""
            << px(Int(0)) << "\" y2=\"" << py(box.lo[1]) << "\" stroke=\"#cccccc\"/>\n";
    if (box.lo[1] <= 0 && box.hi[1] >= 0)
        svg << "<line x1=\"" << px(box.lo[0]) << "\" y1=\"" << py(Int(0)) << "\" x2=\""
            << px(box.hi[0]) << "\" y2=\"" << py(Int(0)) << "\" stroke=\"#cccccc\"/>\n";
    for (Int x = box.lo[0]; x <= box.hi[0]; ++x)
        for (Int y = box.lo[1]; y <= box.hi[1]; ++y) {
            long long cx = px(x), cy = py(y);
            svg << "<circle cx=\"" << cx << "\" cy=\"" << cy
                << "\" r=\"1\" fill=\"#bbbbbb\"/>\n";
            Int v = chain.evaluate(LatticeVector({x, y}));
            if (v == 0) continue;
            if (v == 1 || v == -1) {
                svg << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"5\" fill=\""
                    << (v > 0 ? "black" : "white") << "\" stroke=\"black\"/>\n";
                svg << "<text x=\"" << (cx + 7) << "\" y=\"" << (cy - 7)
                    << "\" font-size=\"12\">" << (v > 0 ? "+1" : "-1") << "</text>\n";
            } else {
                // Four-spike star with the value alongside.
                svg << "<path d=\"M" << (cx - 8) << " " << cy << " L" << (cx - 2) << " "
                    << (cy - 2) << " L" << cx << " " << (cy - 8) << " L" << (cx + 2) << " "
                    << (cy - 2) << " L" << (cx + 8) << " " << cy << " L" << (cx + 2) << " "
                    << (cy + 2) << " L" << cx << " " << (cy + 8) << " L" << (cx - 2) << " "
                    << (cy + 2) << " Z\" fill=\"black\"/>\n";
                svg << "<text x=\"" << (cx + 9) << "\" y=\"" << (cy - 9)
                    << "\" font-size=\"12\">" << v << "</text>\n";
            }
        }
    svg << "</svg>\n";
    return svg.str();
}

struct VerifyOutcome {
    long long weights = 0;
    std::vector<std::string> mismatches;  // lexicographic weight order
};

VerifyOutcome run_verify(const KlyachkoBundle& bundle, const Box& box) {
    const ConvexChain& chain = bundle.bundle_chain();  // throws before threads start
    std::vector<LatticeVector> pts = box_points(box);
    std::vector<std::pair<Int, Int>> results(pts.size());
    unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < workers; ++t) {
        threads.emplace_back([&, t]() {
            for (size_t i = t; i < pts.size(); i += workers)
                results[i] = {chain.evaluate(pts[i]), bundle.cech_euler_oracle(pts[i])};
        });
    }
    for (auto& th : threads) th.join();
    VerifyOutcome out;
    out.weights = static_cast<long long>(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        if (results[i].first == results[i].second) continue;
        std::ostringstream os;
        os << "MISMATCH at (";
        for (size_t k = 0; k < pts[i].c.size(); ++k) os << (k ? "," : "") << pts[i].c[k];
        os << "): chain=" << results[i].first << " cech=" << results[i].second;
        out.mismatches.push_back(os.str());
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Equivariant Euler characteristics of toric vector bundles "
                 "via convex chains"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string polytope_path, chain_path, chain2_path, bundle_path, out_path;
    std::string weight_str, box_str;
    long long t_arg = -1;

    auto* ehr = app.add_subcommand("ehrhart", "lattice-point counts and Ehrhart polynomial");
    ehr->add_option("--polytope", polytope_path, "polytope JSON file")->required();
    ehr->add_option("--t", t_arg, "dilation factor (omit for the polynomial)");

    auto* chain_cmd = app.add_subcommand("chain", "convex-chain operations");
    chain_cmd->require_subcommand(1);
    auto* ceval = chain_cmd->add_subcommand("eval", "evaluate a chain at a weight");
    ceval->add_option("--chain", chain_path)->required();
    ceval->add_option("--weight", weight_str)->required();
    auto* csum = chain_cmd->add_subcommand("sum", "sum of chain values over lattice points");
    csum->add_option("--chain", chain_path)->required();
    auto* cstar = chain_cmd->add_subcommand("star", "star product of two chains");
    cstar->add_option("--chain", chain_path)->required();
    cstar->add_option("--chain2", chain2_path)->required();
    cstar->add_option("--out", out_path);
    auto* cinv = chain_cmd->add_subcommand("invert", "inverse chain of a polytope indicator");
    cinv->add_option("--polytope", polytope_path)->required();
    cinv->add_option("--out", out_path);

    auto* bundle_cmd = app.add_subcommand("bundle", "Klyachko bundle computations");
    bundle_cmd->require_subcommand(1);
    auto* bchi = bundle_cmd->add_subcommand("chi", "Euler characteristic (or one weight)");
    bchi->add_option("--bundle", bundle_path)->required();
    bchi->add_option("--weight", weight_str, "weight u as x,y (omit for total chi)");
    auto* bchain = bundle_cmd->add_subcommand("chain", "associated convex chain");
    bchain->add_option("--bundle", bundle_path)->required();
    bchain->add_option("--out", out_path);
    auto* bchars = bundle_cmd->add_subcommand("characters", "per-cone character multisets");
    bchars->add_option("--bundle", bundle_path)->required();

    auto* verify = app.add_subcommand("verify", "compare chain values against the Cech oracle");
    verify->add_option("--bundle", bundle_path)->required();
    verify->add_option("--box", box_str, "lattice box lo:hi, e.g. -10,-10:10,10")->required();

    auto* plot = app.add_subcommand("plot", "SVG scatter of chain values on lattice points");
    plot->add_option("--chain", chain_path);
    plot->add_option("--bundle", bundle_path);
    plot->add_option("--box", box_str)->required();
    plot->add_option("--out", out_path)->required();

    CLI11_PARSE(app, argc, argv);

    std::ostringstream text;
    Json jout;

    if (ehr->parsed()) {
        Polytope p = polytope_from_json(load_json_file(polytope_path));
        if (*ehr->get_option("--t")) {
            Int count = ehrhart_count(p, Int(t_arg));
            text << count << "\n";
            jout = Json{{"t", t_arg}, {"count", count.str()}};
        } else {
            EhrhartPolynomial poly = ehrhart_polynomial(p);
            text << "coeffs:";
            for (const Rat& c : poly.coeffs) text << " " << rat_to_string(c);
            text << "\n";
            jout = to_json(poly);
        }
    } else if (ceval->parsed()) {
        ConvexChain c = chain_from_json(load_json_file(chain_path));
        Int v = c.evaluate(parse_weight(weight_str));
        text << v << "\n";
        jout = Json{{"value", v.str()}};
    } else if (csum->parsed()) {
        ConvexChain c = chain_from_json(load_json_file(chain_path));
        Int v = lattice_sum(c);
        text << v << "\n";
        jout = Json{{"sum", v.str()}};
    } else if (cstar->parsed()) {
        ConvexChain a = chain_from_json(load_json_file(chain_path));
        ConvexChain b = chain_from_json(load_json_file(chain2_path));
        jout = to_json(star_product(a, b));
        text << jout.dump(2) << "\n";
    } else if (cinv->parsed()) {
        Polytope p = polytope_from_json(load_json_file(polytope_path));
        jout = to_json(invert_indicator(p));
        text << jout.dump(2) << "\n";
    } else if (bchi->parsed()) {
        KlyachkoBundle b = bundle_from_json(load_json_file(bundle_path));
        Int v = weight_str.empty() ? b.euler_characteristic()
                                   : b.equivariant_euler(parse_weight(weight_str));
        text << v << "\n";
        jout = Json{{"chi", v.str()}};
    } else if (bchain->parsed()) {
        KlyachkoBundle b = bundle_from_json(load_json_file(bundle_path));
        jout = to_json(b.bundle_chain());
        text << jout.dump(2) << "\n";
    } else if (bchars->parsed()) {
        KlyachkoBundle b = bundle_from_json(load_json_file(bundle_path));
        Json chars = Json::object();
        for (int i = 0; i < b.fan()->num_max_cones(); ++i) {
            Json list = Json::array();
            for (const auto& u : b.characters(i)) list.push_back(to_json(u));
            chars[std::to_string(i)] = list;
            text << "cone " << i << ":";
            for (const auto& u : b.characters(i)) {
                text << " (";
                for (size_t k = 0; k < u.c.size(); ++k) text << (k ? "," : "") << u.c[k];
                text << ")";
            }
            text << "\n";
        }
        jout = Json{{"characters", chars}};
    } else if (verify->parsed()) {
        KlyachkoBundle b = bundle_from_json(load_json_file(bundle_path));
        VerifyOutcome out = run_verify(b, parse_box(box_str));
        jout = Json{{"weights", out.weights},
                    {"ok", out.mismatches.empty()},
                    {"mismatches", out.mismatches}};
        if (out.mismatches.empty()) {
            text << "OK: chain == cech on " << out.weights << " weights\n";
        } else {
            for (const auto& m : out.mismatches) text << m << "\n";
            emit(as_json ? jout.dump(2) + "\n" : text.str(), "");
            return 1;
        }
    } else if (plot->parsed()) {
        if (chain_path.empty() == bundle_path.empty())
            throw std::invalid_argument("plot needs exactly one of --chain / --bundle");
        ConvexChain c = chain_path.empty()
                            ? bundle_from_json(load_json_file(bundle_path)).bundle_chain()
                            : chain_from_json(load_json_file(chain_path));
        emit(svg_plot(c, parse_box(box_str)), out_path);
        return 0;
    }

    emit(as_json ? jout.dump(2) + "\n" : text.str(), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tvb::JsonFormatError& e) {
        std::cerr << "error: " << e.what() << " (at " << e.location << ")\n";
        return 2;
    } catch (const tvb::IncompatibleBundleError& e) {
        std::cerr << "error: " << e.what() << " (" << e.detail << ")\n";
        return 3;
    } catch (const tvb::NonProjectiveFanError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
