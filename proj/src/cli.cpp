#include "graphdirac/cli.hpp"

#include "graphdirac/clifford.hpp"
#include "graphdirac/dimer.hpp"
#include "graphdirac/error.hpp"
#include "graphdirac/evolution.hpp"
#include "graphdirac/linops.hpp"
#include "graphdirac/walks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace graphdirac {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

OrientedGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

StateVector load_state(const std::string& path, StateKind kind, int expected_dim) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("state JSON: ") + e.what());
    }
    if (!doc.is_array()) throw Error("state JSON: expected an array of values");
    StateVector out;
    out.kind = kind;
    for (const auto& cell : doc) {
        if (cell.is_number())
            out.values.emplace_back(cell.get<double>(), 0.0);
        else if (cell.is_array() && cell.size() == 2 && cell[0].is_number() && cell[1].is_number())
            out.values.emplace_back(cell[0].get<double>(), cell[1].get<double>());
        else
            throw Error("state JSON: values must be numbers or [re, im] pairs");
    }
    if (static_cast<int>(out.values.size()) != expected_dim)
        throw Error("state JSON: expected " + std::to_string(expected_dim) + " values, got " +
                    std::to_string(out.values.size()));
    return out;
}

Matrix build_operator(const OrientedGraph& g, const std::string& name) {
    if (name == "incidence") return incidence_matrix(g);
    if (name == "even-laplacian") return even_laplacian(g);
    if (name == "odd-laplacian") return odd_laplacian(g);
    if (name == "even-dirac") return spectral_dirac(g, Parity::even);
    if (name == "odd-dirac") return spectral_dirac(g, Parity::odd);
    if (name == "incidence-dirac") return incidence_dirac(g);
    throw Error("unknown operator: " + name);
}

StateKind state_kind_for(const std::string& op) {
    if (op == "even" || op == "even-laplacian" || op == "even-dirac") return StateKind::vertex;
    if (op == "odd" || op == "odd-laplacian" || op == "odd-dirac") return StateKind::edge;
    if (op == "incidence" || op == "incidence-dirac") return StateKind::vertex_edge;
    throw Error("unknown operator: " + op);
}

Matrix evolution_operator(const OrientedGraph& g, const std::string& op) {
    if (op == "even") return even_laplacian(g);
    if (op == "odd") return odd_laplacian(g);
    if (op == "incidence") return incidence_dirac(g);
    return build_operator(g, op);
}

std::vector<double> parse_time_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size())
            throw Error("times: cannot parse '" + item + "'");
        out.push_back(value);
    }
    return out;
}

std::vector<int> parse_label_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size())
            throw Error("bridges: cannot parse '" + item + "'");
        out.push_back(value);
    }
    return out;
}

WalkElement parse_walk_element(const std::string& text) {
    if (text.size() < 2 || (text[0] != 'v' && text[0] != 'e'))
        throw Error("walk element must look like v1 or e2");
    WalkElement out;
    out.tag = text[0] == 'v' ? WalkTag::vertex : WalkTag::edge;
    std::size_t used = 0;
    int index = 0;
    try {
        index = std::stoi(text.substr(1), &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() - 1 || index < 1)
        throw Error("walk element must use a positive 1-based index");
    out.index = index - 1;
    return out;
}

std::string complex_to_json(Complex z) {
    return "[" + format_double(z.real()) + "," + format_double(z.imag()) + "]";
}

struct Options {
    std::string input;
    std::string input2;
    std::string op;
    std::string state_path;
    std::string method = "recurrence";
    std::string from;
    std::string to;
    std::string times;
    std::string bridges;
    std::string shape;
    double hbar = 1.0;
    double tol = 1e-9;
    double t0 = 0.0;
    double t1 = 0.0;
    int steps = 0;
    int k = 0;
    int rows = 0;
    int cols = 0;
    int m = 0;
    int n = 0;
    int shift = 0;
    int attach = 0;
    bool json = false;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph Laplace/Dirac operators, quantum evolution, walk counting,\n"
                 "domino tilings, and Clifford graph algebras."};
    app.require_subcommand(1);
    Options opt;

    auto* ops_cmd = app.add_subcommand("ops", "Print an operator matrix for a graph");
    ops_cmd->add_option("--input", opt.input, "graph JSON file")->required();
    ops_cmd->add_option("--op", opt.op,
                        "incidence | even-laplacian | odd-laplacian | even-dirac | "
                        "odd-dirac | incidence-dirac")
        ->required();
    ops_cmd->add_flag("--json", opt.json, "wrap output in a JSON object");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues of a symmetric operator");
    spectrum_cmd->add_option("--input", opt.input, "graph JSON file")->required();
    spectrum_cmd->add_option("--op", opt.op, "symmetric operator name")->required();
    spectrum_cmd->add_flag("--json", opt.json, "also emit eigenvectors");

    auto* kernel_cmd = app.add_subcommand("kernel", "Orthonormal kernel basis of an operator");
    kernel_cmd->add_option("--input", opt.input, "graph JSON file")->required();
    kernel_cmd->add_option("--op", opt.op, "symmetric operator name")->required();
    kernel_cmd->add_option("--tol", opt.tol, "relative kernel tolerance (default 1e-9)");
    kernel_cmd->add_flag("--json", opt.json, "wrap output in a JSON object");

    auto* evolve_cmd = app.add_subcommand("evolve", "CSV time series of a state's evolution");
    evolve_cmd->add_option("--input", opt.input, "graph JSON file")->required();
    evolve_cmd->add_option("--op", opt.op, "even | odd | incidence")->required();
    evolve_cmd->add_option("--state", opt.state_path, "state JSON file")->required();
    evolve_cmd->add_option("--hbar", opt.hbar, "Planck constant (default 1.0)");
    evolve_cmd->add_option("--times", opt.times, "comma-separated time list");
    evolve_cmd->add_option("--t0", opt.t0, "grid start (default 0)");
    evolve_cmd->add_option("--t1", opt.t1, "grid end");
    evolve_cmd->add_option("--steps", opt.steps, "number of grid intervals");

    auto* steady_cmd = app.add_subcommand("steady", "Test whether a state is steady");
    steady_cmd->add_option("--input", opt.input, "graph JSON file")->required();
    steady_cmd->add_option("--op", opt.op, "even | odd | incidence")->required();
    steady_cmd->add_option("--state", opt.state_path, "state JSON file")->required();
    steady_cmd->add_option("--tol", opt.tol, "residual tolerance (default 1e-9)");

    auto* qform_cmd = app.add_subcommand("qform", "Evaluate a graph quadratic form");
    qform_cmd->add_option("--input", opt.input, "graph JSON file")->required();
    qform_cmd->add_option("--kind", opt.op, "even | odd | incidence")->required();
    qform_cmd->add_option("--state", opt.state_path, "state JSON file")->required();

    auto* walks_cmd = app.add_subcommand("walks", "List signed vertex-edge walks");
    walks_cmd->add_option("--input", opt.input, "graph JSON file")->required();
    walks_cmd->add_option("--from", opt.from, "start element, e.g. v1")->required();
    walks_cmd->add_option("--to", opt.to, "end element, e.g. e1")->required();
    walks_cmd->add_option("--k", opt.k, "walk length")->required();

    auto* dimer_cmd = app.add_subcommand("dimer", "Domino tilings of lattice graphs");
    dimer_cmd->require_subcommand(1);
    auto* count_cmd = dimer_cmd->add_subcommand("count", "Count tilings of a k x n lattice");
    count_cmd->add_option("--rows", opt.rows, "lattice rows (2, 3, or 4 for recurrences)")
        ->required();
    count_cmd->add_option("--cols", opt.cols, "lattice columns")->required();
    count_cmd->add_option("--method", opt.method, "recurrence | brute | kasteleyn | closed");
    auto* glue_cmd = dimer_cmd->add_subcommand("glue", "Count tilings of two glued lattices");
    glue_cmd->add_option("--rows", opt.rows, "lattice rows")->required();
    glue_cmd->add_option("-m", opt.m, "columns of the left lattice")->required();
    glue_cmd->add_option("-n", opt.n, "columns of the right lattice")->required();
    glue_cmd->add_option("--shift", opt.shift, "downward shift of the right lattice");
    glue_cmd->add_option("--bridges", opt.bridges, "forced bridge labels, e.g. 1,2");
    auto* identity_cmd =
        dimer_cmd->add_subcommand("identity", "Check the bridge-case sum against T_k(m+n)");
    identity_cmd->add_option("--rows", opt.rows, "lattice rows")->required();
    identity_cmd->add_option("-m", opt.m, "columns of the left lattice")->required();
    identity_cmd->add_option("-n", opt.n, "columns of the right lattice")->required();

    auto* clifford_cmd = app.add_subcommand("clifford", "Clifford graph algebra centers");
    clifford_cmd->require_subcommand(1);
    auto* center_cmd = clifford_cmd->add_subcommand("center", "Central monomials of a graph");
    center_cmd->add_option("--input", opt.input, "graph JSON file")->required();
    center_cmd->add_flag("--json", opt.json, "wrap output in a JSON object");
    auto* predict_cmd =
        clifford_cmd->add_subcommand("predict", "Theorem-predicted center dimension");
    predict_cmd->add_option("--shape", opt.shape, "path | glued-paths | disjoint")->required();
    predict_cmd->add_option("--n", opt.n, "path length n");
    predict_cmd->add_option("--m", opt.m, "path length m (glued-paths)");
    predict_cmd->add_option("--attach", opt.attach, "interior attach vertex, 1-based");
    predict_cmd->add_option("--g1", opt.input, "first graph JSON (disjoint)");
    predict_cmd->add_option("--g2", opt.input2, "second graph JSON (disjoint)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*ops_cmd) {
            OrientedGraph g = load_graph(opt.input);
            Matrix m = build_operator(g, opt.op);
            if (opt.json)
                out << "{\"op\":\"" << opt.op << "\",\"rows\":" << m.rows()
                    << ",\"cols\":" << m.cols() << ",\"matrix\":" << to_json(m) << "}\n";
            else
                out << to_json(m) << "\n";
        } else if (*spectrum_cmd) {
            OrientedGraph g = load_graph(opt.input);
            Spectrum spec = spectrum(build_operator(g, opt.op));
            std::string eigs = "[";
            for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
                if (i > 0) eigs += ",";
                eigs += format_double(spec.eigenvalues[i]);
            }
            eigs += "]";
            if (opt.json)
                out << "{\"eigenvalues\":" << eigs
                    << ",\"eigenvectors\":" << to_json(spec.eigenvectors.transpose()) << "}\n";
            else
                out << eigs << "\n";
        } else if (*kernel_cmd) {
            OrientedGraph g = load_graph(opt.input);
            auto basis = kernel_basis(build_operator(g, opt.op), opt.tol);
            Matrix rows(static_cast<int>(basis.size()),
                        basis.empty() ? 0 : static_cast<int>(basis.front().size()));
            for (int i = 0; i < rows.rows(); ++i)
                for (int j = 0; j < rows.cols(); ++j)
                    rows(i, j) = basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (opt.json)
                out << "{\"dimension\":" << basis.size() << ",\"basis\":" << to_json(rows)
                    << "}\n";
            else
                out << to_json(rows) << "\n";
        } else if (*evolve_cmd) {
            OrientedGraph g = load_graph(opt.input);
            Matrix op_matrix = evolution_operator(g, opt.op);
            StateVector psi0 = load_state(opt.state_path, state_kind_for(opt.op), op_matrix.rows());
            EvolutionParams params;
            params.hbar = opt.hbar;
            if (!opt.times.empty()) {
                params.grid = parse_time_list(opt.times);
            } else {
                if (opt.steps < 1) throw Error("evolve: need --times or --t1 with --steps >= 1");
                for (int i = 0; i <= opt.steps; ++i)
                    params.grid.push_back(opt.t0 + (opt.t1 - opt.t0) * i / opt.steps);
            }
            out << "t,avg_re,avg_im,avg_angle,norm\n";
            for (const TimeSeriesRow& row : time_series(op_matrix, psi0, params))
                out << format_double(row.t) << "," << format_double(row.avg_re) << ","
                    << format_double(row.avg_im) << "," << format_double(row.avg_angle) << ","
                    << format_double(row.norm) << "\n";
        } else if (*steady_cmd) {
            OrientedGraph g = load_graph(opt.input);
            Matrix op_matrix = evolution_operator(g, opt.op);
            StateVector psi = load_state(opt.state_path, state_kind_for(opt.op), op_matrix.rows());
            out << (is_steady(op_matrix, psi, opt.tol) ? "steady" : "not steady") << "\n";
        } else if (*qform_cmd) {
            OrientedGraph g = load_graph(opt.input);
            FormKind kind = opt.op == "even"  ? FormKind::even
                            : opt.op == "odd" ? FormKind::odd
                            : opt.op == "incidence"
                                ? FormKind::incidence
                                : throw Error("unknown form kind: " + opt.op);
            StateVector psi =
                load_state(opt.state_path, state_kind_for(opt.op), state_dimension(g, state_kind_for(opt.op)));
            out << complex_to_json(quadratic_form(kind, g, psi)) << "\n";
        } else if (*walks_cmd) {
            OrientedGraph g = load_graph(opt.input);
            auto walks =
                enumerate_signed_walks(g, parse_walk_element(opt.from), parse_walk_element(opt.to), opt.k);
            long long signed_sum = 0;
            for (const SignedWalk& walk : walks) {
                out << walk_to_string(walk) << "\n";
                signed_sum += walk.sign;
            }
            out << "walks: " << walks.size() << "  signed sum: " << signed_sum << "\n";
        } else if (*count_cmd) {
            if (opt.method == "recurrence") {
                out << tiling_count(opt.rows, opt.cols).str() << "\n";
            } else if (opt.method == "brute") {
                out << count_matchings_brute(lattice(opt.rows, opt.cols).graph).str() << "\n";
            } else if (opt.method == "kasteleyn") {
                BigInt abs2 = kasteleyn_det_abs2(lattice(opt.rows, opt.cols));
                long long det2 = abs2.to_longlong();
                long long t = std::llround(std::sqrt(std::sqrt(static_cast<double>(det2))));
                if (BigInt(t) * BigInt(t) * BigInt(t) * BigInt(t) != abs2)
                    throw Error("kasteleyn: |det| is not a perfect square of an integer count");
                out << t << "\n";
            } else if (opt.method == "closed") {
                out << std::llround(tiling_closed(opt.rows, opt.cols)) << "\n";
            } else {
                throw Error("unknown method: " + opt.method);
            }
        } else if (*glue_cmd) {
            GluingSpec spec;
            spec.k = opt.rows;
            spec.m = opt.m;
            spec.n = opt.n;
            spec.shift = opt.shift;
            spec.bridges = parse_label_list(opt.bridges);
            out << glued_tiling_count(spec).str() << "\n";
        } else if (*identity_cmd) {
            GluingIdentity id = gluing_identity_check(opt.rows, opt.m, opt.n);
            out << "sum over bridge cases: " << id.case_sum.str() << "\n";
            out << "T_" << opt.rows << "(" << opt.m + opt.n << "): " << id.direct.str() << "\n";
        } else if (*center_cmd) {
            OrientedGraph g = load_graph(opt.input);
            auto centers = center_basis(g);
            if (opt.json) {
                out << "{\"dimension\":" << centers.size() << ",\"monomials\":[";
                for (std::size_t i = 0; i < centers.size(); ++i) {
                    if (i > 0) out << ",";
                    out << "\"" << monomial_to_string(centers[i]) << "\"";
                }
                out << "]}\n";
            } else {
                for (std::size_t i = 0; i < centers.size(); ++i) {
                    if (i > 0) out << "; ";
                    out << monomial_to_string(centers[i]);
                }
                out << "\n";
                out << "dimension: " << centers.size() << "\n";
            }
        } else if (*predict_cmd) {
            CenterShape shape;
            if (opt.shape == "path") {
                shape = PathShape{opt.n};
            } else if (opt.shape == "glued-paths") {
                shape = GluedPathsShape{opt.n, opt.m, opt.attach};
            } else if (opt.shape == "disjoint") {
                if (opt.input.empty() || opt.input2.empty())
                    throw Error("disjoint shape needs --g1 and --g2");
                shape = DisjointShape{load_graph(opt.input), load_graph(opt.input2)};
            } else {
                throw Error("unknown shape: " + opt.shape);
            }
            out << predicted_center_dim(shape) << "\n";
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace graphdirac
