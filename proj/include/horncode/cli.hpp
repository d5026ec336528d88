#ifndef HORNCODE_CLI_HPP
#define HORNCODE_CLI_HPP

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "codes.hpp"
#include "format.hpp"
#include "horn.hpp"
#include "poly_matrix.hpp"
#include "projective.hpp"
#include "symmetric.hpp"
#include "verify.hpp"

namespace horncode {

constexpr const char* kSchemaVersion = "1";

/// Outcome of one CLI invocation. An error status always carries a nonzero
/// exit code and an empty payload.
struct CommandResult {
    enum class Status { ok, error };
    Status status = Status::ok;
    nlohmann::json payload;             // mirrors the invoked operation's return
    std::vector<std::string> diagnostics;
    int exit_code = 0;
    std::string text;                   // what the binary prints on stdout
};

namespace cli_detail {

using nlohmann::json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline json partition_json(const Partition& p) { return partition_to_string(p); }

inline json matrix_json(const std::vector<std::vector<long long>>& m) {
    json rows = json::array();
    for (const auto& r : m) rows.push_back(r);
    return rows;
}

inline json slice_json(const CoefficientSlice& s) {
    json j;
    j["nu"] = partition_to_string(s.nu);
    j["kind"] = s.kind == SliceKind::LR ? "lr" : "kronecker";
    json idx = json::array();
    for (const auto& p : s.index) idx.push_back(partition_to_string(p));
    j["index"] = idx;
    j["entries"] = matrix_json(s.entries);
    return j;
}

inline std::string render_int_matrix(const std::vector<std::vector<long long>>& m) {
    std::ostringstream os;
    for (const auto& row : m) {
        for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << "\n";
    }
    return os.str();
}

inline P1Point parse_p1_point(const FieldSpec& f, const std::string& s) {
    std::string t = fmt_detail::strip_spaces(s);
    if (t == "inf") return P1Point::infinity(f);
    return P1Point::finite(f, parse_element(f, t));
}

inline std::string p1_point_to_string(const P1Point& p) {
    return p.is_infinity() ? "inf" : element_to_string(p.field(), p.value());
}

inline PolyMatrix matrix_from_sources(const FieldSpec& f, const std::string& file,
                                      const std::vector<std::string>& rows) {
    if (!file.empty() && !rows.empty())
        throw std::invalid_argument("give either a matrix file or --row entries, not both");
    if (!file.empty()) return parse_poly_matrix(f, read_file(file));
    if (rows.empty()) throw std::invalid_argument("no matrix given (use a file argument or --row)");
    std::ostringstream os;
    for (const auto& r : rows) os << r << "\n";
    return parse_poly_matrix(f, os.str());
}

inline FqMatrix element_matrix_from_text(const FieldSpec& f, const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_element(f, tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    return FqMatrix(f, std::move(rows));
}

inline std::string render_code(const LinearCode& code, int distance /* -1 when skipped */) {
    std::ostringstream os;
    os << code.length() << " " << code.dimension() << " " << (distance >= 0 ? std::to_string(distance) : "-")
       << " " << code.field().order() << "\n";
    const FqMatrix& g = code.generator();
    for (size_t i = 0; i < g.rows(); ++i) {
        for (size_t j = 0; j < g.cols(); ++j)
            os << (j ? " " : "") << element_to_string(code.field(), g.at(i, j));
        os << "\n";
    }
    return os.str();
}

inline json code_json(const LinearCode& code, int distance) {
    json j;
    j["length"] = code.length();
    j["dimension"] = code.dimension();
    if (distance >= 0) j["min_distance"] = distance;
    j["q"] = code.field().order();
    json rows = json::array();
    const FqMatrix& g = code.generator();
    for (size_t i = 0; i < g.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < g.cols(); ++j) row.push_back(element_to_string(code.field(), g.at(i, j)));
        rows.push_back(row);
    }
    j["generator"] = rows;
    return j;
}

inline int distance_if_feasible(const LinearCode& code, long long bound) {
    if (code.dimension() == 0) return -1;
    try {
        return min_distance(code, bound);
    } catch (const ExhaustionLimit&) {
        return -1;
    }
}

inline json suite_json(const SuiteResult& s) {
    json j;
    j["suite"] = s.suite;
    j["all_pass"] = s.all_pass();
    json checks = json::array();
    for (const auto& c : s.checks) {
        json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    return j;
}

inline std::string render_suite(const SuiteResult& s) {
    std::ostringstream os;
    for (const auto& c : s.checks)
        os << (c.pass ? "PASS" : "FAIL") << " " << s.suite << "/" << c.name
           << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    os << (s.all_pass() ? "PASS" : "FAIL") << " suite " << s.suite << "\n";
    return os.str();
}

}  // namespace cli_detail

/// Dispatches one command line (without the program name). Never throws:
/// failures are reported through the result's status, exit code and
/// diagnostics.
inline CommandResult run(const std::vector<std::string>& argv);

namespace cli_detail {

struct Ctx {
    bool json_out = false;
    json payload;
    std::string text;
    int exit_code = 0;
};

inline void emit(Ctx& ctx, const std::string& command, json payload, std::string humanText) {
    payload["command"] = command;
    ctx.payload = std::move(payload);
    ctx.text = std::move(humanText);
}

}  // namespace cli_detail

inline CommandResult run(const std::vector<std::string>& argv) {
    using cli_detail::Ctx;
    using nlohmann::json;

    CommandResult result;
    Ctx ctx;

    CLI::App app{"exact combinatorics, finite-field algebra and evaluation codes"};
    app.name("horncode");
    app.require_subcommand(0, 1);
    app.add_flag("--json", ctx.json_out, "emit a single JSON document");

    // Deferred actions: CLI11 callbacks run during parse; each subcommand
    // fills ctx when it is the chosen one.

    // partition
    auto* cmdPartition = app.add_subcommand("partition", "partition enumeration and partition-shaped helpers");
    auto pN = std::make_shared<int>(-1);
    auto pConj = std::make_shared<std::string>();
    auto pFromIdx = std::make_shared<std::string>();
    auto pR = std::make_shared<int>(0);
    auto pAmbient = std::make_shared<int>(0);
    auto pHyper = std::make_shared<std::string>();
    auto pHyperD = std::make_shared<int>(0);
    cmdPartition->add_option("n", *pN, "list all partitions of n");
    cmdPartition->add_option("--conjugate", *pConj, "conjugate the given partition");
    cmdPartition->add_option("--from-index-set", *pFromIdx, "index set, e.g. {2,4}");
    cmdPartition->add_option("--r", *pR, "cardinality for --from-index-set");
    cmdPartition->add_option("--ambient", *pAmbient, "ambient n for --from-index-set (default: max element)");
    cmdPartition->add_option("--hypersimplex", *pHyper, "comma-separated rationals to test for membership");
    cmdPartition->add_option("-d", *pHyperD, "d parameter for --hypersimplex");
    cmdPartition->callback([=, &ctx] {
        json j;
        std::ostringstream os;
        if (!pConj->empty()) {
            Partition c = conjugate(parse_partition(*pConj));
            j["conjugate"] = partition_to_string(c);
            os << partition_to_string(c) << "\n";
        } else if (!pFromIdx->empty()) {
            int ambient = *pAmbient;
            if (ambient == 0) {
                IndexSet probe = parse_index_set(*pFromIdx, 1 << 20);
                ambient = probe.elements().empty() ? 1 : probe.elements().back();
            }
            IndexSet I = parse_index_set(*pFromIdx, ambient);
            Partition lam = partition_from_index_set(I, *pR > 0 ? *pR : I.cardinality());
            j["partition"] = partition_to_string(lam);
            os << partition_to_string(lam) << "\n";
        } else if (!pHyper->empty()) {
            std::vector<Rational> c;
            for (const auto& tok : fmt_detail::split(fmt_detail::strip_spaces(*pHyper), ','))
                c.push_back(parse_rational(tok));
            bool in = hypersimplex_contains(c, *pHyperD, static_cast<int>(c.size()));
            j["contains"] = in;
            os << (in ? "true" : "false") << "\n";
        } else if (*pN >= 0) {
            auto parts = partitions_of(*pN);
            j["count"] = parts.size();
            json arr = json::array();
            for (const auto& p : parts) {
                arr.push_back(partition_to_string(p));
                os << partition_to_string(p) << "\n";
            }
            j["partitions"] = arr;
            os << "count " << parts.size() << "\n";
        } else {
            throw CLI::ValidationError("partition", "give n or one of --conjugate/--from-index-set/--hypersimplex");
        }
        cli_detail::emit(ctx, "partition", std::move(j), os.str());
    });

    // qbinom
    auto* cmdQbinom = app.add_subcommand("qbinom", "q-binomial subspace count");
    auto qbN = std::make_shared<int>(), qbR = std::make_shared<int>();
    auto qbQ = std::make_shared<long long>();
    cmdQbinom->add_option("n", *qbN)->required();
    cmdQbinom->add_option("r", *qbR)->required();
    cmdQbinom->add_option("q", *qbQ)->required();
    cmdQbinom->callback([=, &ctx] {
        long long v = q_binomial(*qbN, *qbR, *qbQ);
        json j;
        j["value"] = v;
        cli_detail::emit(ctx, "qbinom", std::move(j), std::to_string(v) + "\n");
    });

    // schur
    auto* cmdSchur = app.add_subcommand("schur", "Schur polynomial in m variables");
    auto scLambda = std::make_shared<std::string>();
    auto scM = std::make_shared<int>();
    cmdSchur->add_option("--lambda", *scLambda, "partition")->required();
    cmdSchur->add_option("-m", *scM, "number of variables")->required();
    cmdSchur->callback([=, &ctx] {
        auto s = schur_polynomial(parse_partition(*scLambda), *scM);
        json j;
        j["polynomial"] = s.to_string();
        j["terms"] = s.terms().size();
        cli_detail::emit(ctx, "schur", std::move(j), s.to_string() + "\n");
    });

    // lr
    auto* cmdLr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    auto lrL = std::make_shared<std::string>(), lrM = std::make_shared<std::string>(),
         lrN = std::make_shared<std::string>();
    cmdLr->add_option("--lambda", *lrL)->required();
    cmdLr->add_option("--mu", *lrM)->required();
    cmdLr->add_option("--nu", *lrN)->required();
    cmdLr->callback([=, &ctx] {
        long long c = lr_coefficient(parse_partition(*lrL), parse_partition(*lrM), parse_partition(*lrN));
        json j;
        j["coefficient"] = c;
        cli_detail::emit(ctx, "lr", std::move(j), std::to_string(c) + "\n");
    });

    // kron
    auto* cmdKron = app.add_subcommand("kron", "Kronecker coefficient");
    auto krL = std::make_shared<std::string>(), krM = std::make_shared<std::string>(),
         krN = std::make_shared<std::string>();
    cmdKron->add_option("--lambda", *krL)->required();
    cmdKron->add_option("--mu", *krM)->required();
    cmdKron->add_option("--nu", *krN)->required();
    cmdKron->callback([=, &ctx] {
        long long c =
            kronecker_coefficient(parse_partition(*krL), parse_partition(*krM), parse_partition(*krN));
        json j;
        j["coefficient"] = c;
        cli_detail::emit(ctx, "kron", std::move(j), std::to_string(c) + "\n");
    });

    // kron-matrix
    auto* cmdKm = app.add_subcommand("kron-matrix", "coefficient slice for fixed nu, or the product experiment");
    auto kmNu = std::make_shared<std::string>();
    auto kmKind = std::make_shared<std::string>("kron");
    auto kmExperiment = std::make_shared<bool>(false);
    cmdKm->add_option("--nu", *kmNu)->required();
    cmdKm->add_option("--kind", *kmKind, "kron or lr")->check(CLI::IsMember({"kron", "lr"}));
    cmdKm->add_flag("--experiment", *kmExperiment, "run the slice product experiment");
    cmdKm->callback([=, &ctx] {
        Partition nu = parse_partition(*kmNu);
        json j;
        std::ostringstream os;
        if (*kmExperiment) {
            auto rep = matrix_product_experiment(nu);
            j["homogeneous"] = {{"lr", cli_detail::slice_json(rep.lr_homogeneous)},
                                {"kronecker", cli_detail::slice_json(rep.kron_homogeneous)},
                                {"product", cli_detail::matrix_json(rep.product_homogeneous)},
                                {"is_identity", rep.homogeneous_is_identity}};
            j["split_defined"] = rep.split_defined;
            if (rep.split_defined)
                j["split"] = {{"lr", cli_detail::slice_json(rep.lr_split)},
                              {"kronecker", cli_detail::slice_json(rep.kron_split)},
                              {"product", cli_detail::matrix_json(rep.product_split)},
                              {"is_identity", rep.split_is_identity}};
            j["note"] = rep.note;
            os << rep.note << "\n";
            os << "homogeneous product:\n" << cli_detail::render_int_matrix(rep.product_homogeneous);
            if (rep.split_defined) os << "split product:\n" << cli_detail::render_int_matrix(rep.product_split);
        } else {
            auto slice = coefficient_matrix_slice(nu, *kmKind == "lr" ? SliceKind::LR : SliceKind::Kronecker);
            j = cli_detail::slice_json(slice);
            os << "order:";
            for (const auto& p : slice.index) os << " " << partition_to_string(p);
            os << "\n" << cli_detail::render_int_matrix(slice.entries);
        }
        cli_detail::emit(ctx, "kron-matrix", std::move(j), os.str());
    });

    // lr-support
    auto* cmdSupport = app.add_subcommand("lr-support", "positive-coefficient triples of degree n");
    auto lsN = std::make_shared<int>();
    cmdSupport->add_option("n", *lsN)->required();
    cmdSupport->callback([=, &ctx] {
        auto sup = lr_support(*lsN);
        json arr = json::array();
        std::ostringstream os;
        for (const auto& [l, m, n2] : sup) {
            json t;
            t["lambda"] = partition_to_string(l);
            t["mu"] = partition_to_string(m);
            t["nu"] = partition_to_string(n2);
            arr.push_back(t);
            os << partition_to_string(l) << " ; " << partition_to_string(m) << " ; " << partition_to_string(n2)
               << "\n";
        }
        json j;
        j["count"] = sup.size();
        j["triples"] = arr;
        os << "count " << sup.size() << "\n";
        cli_detail::emit(ctx, "lr-support", std::move(j), os.str());
    });

    // horn
    auto* cmdHorn = app.add_subcommand("horn", "Horn index-triple sets");
    auto hKind = std::make_shared<std::string>();
    auto hN = std::make_shared<int>(), hR = std::make_shared<int>();
    cmdHorn->add_option("kind", *hKind, "u, t or check")->required()->check(CLI::IsMember({"u", "t", "check"}));
    cmdHorn->add_option("n", *hN)->required();
    cmdHorn->add_option("r", *hR)->required();
    cmdHorn->callback([=, &ctx] {
        json j;
        std::ostringstream os;
        if (*hKind == "check") {
            auto rep = horn_lr_consistency(*hN, *hR);
            json arr = json::array();
            for (const auto& e : rep.entries) {
                json je;
                je["triple"] = triple_to_string(e.triple);
                je["lambda"] = partition_to_string(e.lambda);
                je["mu"] = partition_to_string(e.mu);
                je["nu"] = partition_to_string(e.nu);
                je["coefficient"] = e.coefficient;
                je["in_t"] = e.in_t;
                arr.push_back(je);
                os << triple_to_string(e.triple) << "  c=" << e.coefficient << (e.in_t ? "  [T]" : "  [U\\T]")
                   << "\n";
            }
            j["entries"] = arr;
            j["all_t_positive"] = rep.all_t_positive;
            j["all_complement_zero"] = rep.all_complement_zero;
            os << "all T-triples positive: " << (rep.all_t_positive ? "yes" : "no") << "\n";
            os << "all U\\T coefficients zero: " << (rep.all_complement_zero ? "yes" : "no") << "\n";
        } else {
            auto triples = *hKind == "u" ? u_set(*hN, *hR) : t_set(*hN, *hR);
            json arr = json::array();
            for (const auto& t : triples) {
                arr.push_back(triple_to_string(t));
                os << triple_to_string(t) << "\n";
            }
            j["triples"] = arr;
            j["count"] = triples.size();
            os << "count " << triples.size() << "\n";
        }
        cli_detail::emit(ctx, "horn", std::move(j), os.str());
    });

    // field
    auto* cmdField = app.add_subcommand("field", "finite-field arithmetic");
    auto fSpec = std::make_shared<std::string>();
    auto fOp = std::make_shared<std::string>();
    auto fA = std::make_shared<std::string>(), fB = std::make_shared<std::string>();
    auto fE = std::make_shared<long long>(0);
    cmdField->add_option("spec", *fSpec, "p, p^k or p^k/modulus")->required();
    cmdField->add_option("--op", *fOp)->check(CLI::IsMember({"add", "sub", "mul", "div", "inv", "pow"}));
    cmdField->add_option("-a", *fA, "first operand");
    cmdField->add_option("-b", *fB, "second operand");
    cmdField->add_option("-e", *fE, "exponent for pow");
    cmdField->callback([=, &ctx] {
        auto F = parse_field_spec(*fSpec);
        json j;
        j["field"] = field_spec_to_string(*F);
        j["order"] = F->order();
        j["characteristic"] = F->characteristic();
        j["extension_degree"] = F->extension_degree();
        std::ostringstream os;
        if (fOp->empty()) {
            os << "GF(" << F->order() << ")  spec " << field_spec_to_string(*F) << "\n";
        } else {
            int a = parse_element(*F, *fA);
            int r;
            if (*fOp == "inv")
                r = F->inv(a);
            else if (*fOp == "pow")
                r = F->pow(a, *fE);
            else {
                if (fB->empty()) throw std::invalid_argument("binary field op needs -b");
                int b = parse_element(*F, *fB);
                r = *fOp == "add"   ? F->add(a, b)
                    : *fOp == "sub" ? F->sub(a, b)
                    : *fOp == "mul" ? F->mul(a, b)
                                    : F->div(a, b);
            }
            j["result"] = element_to_string(*F, r);
            os << element_to_string(*F, r) << "\n";
        }
        cli_detail::emit(ctx, "field", std::move(j), os.str());
    });

    // shared field option helper
    auto addFieldOpt = [](CLI::App* cmd, std::shared_ptr<std::string> store) {
        cmd->add_option("--field", *store, "field spec: p, p^k or p^k/modulus")->required();
    };

    // euclid
    auto* cmdEuclid = app.add_subcommand("euclid", "Euclidean quotient chain of f over g");
    auto euField = std::make_shared<std::string>();
    auto euF = std::make_shared<std::string>(), euG = std::make_shared<std::string>();
    auto euDivmod = std::make_shared<bool>(false);
    addFieldOpt(cmdEuclid, euField);
    cmdEuclid->add_option("-f", *euF)->required();
    cmdEuclid->add_option("-g", *euG)->required();
    cmdEuclid->add_flag("--divmod", *euDivmod, "print only quotient and remainder of one division");
    cmdEuclid->callback([=, &ctx] {
        auto F = parse_field_spec(*euField);
        Poly f = parse_poly(*F, *euF), g = parse_poly(*F, *euG);
        json j;
        std::ostringstream os;
        if (*euDivmod) {
            auto [q, r] = poly_divmod(f, g);
            j["quotient"] = poly_to_string(q);
            j["remainder"] = poly_to_string(r);
            os << "q: " << poly_to_string(q) << "\nr: " << poly_to_string(r) << "\n";
        } else {
            auto qs = euclid_quotients(f, g);
            json arr = json::array();
            for (const auto& q : qs) {
                arr.push_back(poly_to_string(q));
                os << poly_to_string(q) << "\n";
            }
            j["quotients"] = arr;
        }
        cli_detail::emit(ctx, "euclid", std::move(j), os.str());
    });

    // qmatrix
    auto* cmdQm = app.add_subcommand("qmatrix", "diagonal quotient matrix of a rational function");
    auto qmField = std::make_shared<std::string>();
    auto qmNum = std::make_shared<std::string>(), qmDen = std::make_shared<std::string>();
    addFieldOpt(cmdQm, qmField);
    cmdQm->add_option("--num", *qmNum)->required();
    cmdQm->add_option("--den", *qmDen)->required();
    cmdQm->callback([=, &ctx] {
        auto F = parse_field_spec(*qmField);
        RationalFunction phi(parse_poly(*F, *qmNum), parse_poly(*F, *qmDen));
        PolyMatrix M = quotient_matrix(phi);
        json j;
        j["matrix"] = poly_matrix_to_string(M);
        json diag = json::array();
        for (size_t i = 0; i < M.rows(); ++i) diag.push_back(poly_to_string(M.at(i, i)));
        j["diagonal"] = diag;
        cli_detail::emit(ctx, "qmatrix", std::move(j), poly_matrix_to_string(M));
    });

    // local-degree
    auto* cmdLd = app.add_subcommand("local-degree", "ramification multiplicity of a rational map at a point");
    auto ldField = std::make_shared<std::string>();
    auto ldNum = std::make_shared<std::string>(), ldDen = std::make_shared<std::string>(),
         ldAt = std::make_shared<std::string>();
    addFieldOpt(cmdLd, ldField);
    cmdLd->add_option("--num", *ldNum)->required();
    cmdLd->add_option("--den", *ldDen, "denominator (default 1)");
    cmdLd->add_option("--at", *ldAt, "evaluation point (element or inf)")->required();
    cmdLd->callback([=, &ctx] {
        auto F = parse_field_spec(*ldField);
        Poly den = ldDen->empty() ? Poly::one(*F) : parse_poly(*F, *ldDen);
        RationalFunction phi(parse_poly(*F, *ldNum), den);
        int m = local_degree(phi, cli_detail::parse_p1_point(*F, *ldAt));
        json j;
        j["local_degree"] = m;
        cli_detail::emit(ctx, "local-degree", std::move(j), std::to_string(m) + "\n");
    });

    // snf
    auto* cmdSnf = app.add_subcommand("snf", "Smith normal form of a polynomial matrix");
    auto snField = std::make_shared<std::string>();
    auto snFile = std::make_shared<std::string>();
    auto snRows = std::make_shared<std::vector<std::string>>();
    auto snTransforms = std::make_shared<bool>(false);
    addFieldOpt(cmdSnf, snField);
    cmdSnf->add_option("file", *snFile, "matrix file: one row per line, ';'-separated entries");
    cmdSnf->add_option("--row", *snRows, "inline row (repeatable)");
    cmdSnf->add_flag("--transforms", *snTransforms, "also print U and V");
    cmdSnf->callback([=, &ctx] {
        auto F = parse_field_spec(*snField);
        PolyMatrix A = cli_detail::matrix_from_sources(*F, *snFile, *snRows);
        auto snf = smith_normal_form(A);
        json j;
        json factors = json::array();
        std::ostringstream os;
        os << "invariant factors:\n";
        for (const auto& d : snf.invariant_factors) {
            factors.push_back(poly_to_string(d));
            os << poly_to_string(d) << "\n";
        }
        j["invariant_factors"] = factors;
        bool nonsingularSquare = A.rows() == A.cols();
        for (const auto& d : snf.invariant_factors) nonsingularSquare = nonsingularSquare && !d.is_zero();
        if (nonsingularSquare) {
            Partition part = invariant_factor_partition(A);
            j["partition"] = partition_to_string(part);
            os << "partition: " << partition_to_string(part) << "\n";
        }
        if (*snTransforms) {
            j["U"] = poly_matrix_to_string(snf.U);
            j["V"] = poly_matrix_to_string(snf.V);
            os << "U:\n" << poly_matrix_to_string(snf.U) << "V:\n" << poly_matrix_to_string(snf.V);
        }
        cli_detail::emit(ctx, "snf", std::move(j), os.str());
    });

    // horn-instance
    auto* cmdHi = app.add_subcommand("horn-instance", "invariant-factor partitions of A, B and A*B");
    auto hiField = std::make_shared<std::string>();
    auto hiA = std::make_shared<std::string>(), hiB = std::make_shared<std::string>();
    auto hiARows = std::make_shared<std::vector<std::string>>(), hiBRows = std::make_shared<std::vector<std::string>>();
    addFieldOpt(cmdHi, hiField);
    cmdHi->add_option("--a", *hiA, "matrix file for A");
    cmdHi->add_option("--b", *hiB, "matrix file for B");
    cmdHi->add_option("--arow", *hiARows, "inline row of A (repeatable)");
    cmdHi->add_option("--brow", *hiBRows, "inline row of B (repeatable)");
    cmdHi->callback([=, &ctx] {
        auto F = parse_field_spec(*hiField);
        PolyMatrix A = cli_detail::matrix_from_sources(*F, *hiA, *hiARows);
        PolyMatrix B = cli_detail::matrix_from_sources(*F, *hiB, *hiBRows);
        auto inst = horn_instance(A, B);
        json j;
        j["alpha"] = partition_to_string(inst.alpha);
        j["beta"] = partition_to_string(inst.beta);
        j["gamma"] = partition_to_string(inst.gamma);
        std::ostringstream os;
        os << "alpha: " << partition_to_string(inst.alpha) << "\n";
        os << "beta:  " << partition_to_string(inst.beta) << "\n";
        os << "gamma: " << partition_to_string(inst.gamma) << "\n";
        cli_detail::emit(ctx, "horn-instance", std::move(j), os.str());
    });

    // nrc
    auto* cmdNrc = app.add_subcommand("nrc", "rational normal curve points");
    auto nrN = std::make_shared<int>();
    auto nrQ = std::make_shared<long long>(0);
    auto nrField = std::make_shared<std::string>();
    auto nrCheck = std::make_shared<bool>(false);
    cmdNrc->add_option("n", *nrN)->required();
    cmdNrc->add_option("q", *nrQ, "field order (prime power)");
    cmdNrc->add_option("--field", *nrField, "explicit field spec (overrides q)");
    cmdNrc->add_flag("--check-collineations", *nrCheck, "verify diagonal and reversal invariance");
    cmdNrc->callback([=, &ctx] {
        std::shared_ptr<const FieldSpec> F;
        if (!nrField->empty()) {
            F = parse_field_spec(*nrField);
        } else {
            long long p;
            int k;
            if (!is_prime_power(*nrQ, p, k)) throw std::invalid_argument("q must be a prime power");
            F = std::make_shared<const FieldSpec>(p, k);
        }
        json j;
        std::ostringstream os;
        if (*nrCheck) {
            auto rep = collineation_invariance_check(*nrN, *F);
            j["all_diagonal_preserved"] = rep.all_diagonal_preserved;
            j["reversal_preserved"] = rep.reversal_preserved;
            os << "diagonal collineations preserve the curve: " << (rep.all_diagonal_preserved ? "yes" : "no")
               << "\n";
            os << "reversal preserves the curve: " << (rep.reversal_preserved ? "yes" : "no") << "\n";
        } else {
            auto pts = nrc_points(*nrN, *F);
            json arr = json::array();
            for (const auto& p : pts) {
                arr.push_back(point_to_string(p));
                os << point_to_string(p) << "\n";
            }
            j["points"] = arr;
            j["count"] = pts.size();
            os << "count " << pts.size() << "\n";
        }
        cli_detail::emit(ctx, "nrc", std::move(j), os.str());
    });

    // veronese
    auto* cmdVer = app.add_subcommand("veronese", "degree-d Veronese image of a point of the line");
    auto veField = std::make_shared<std::string>();
    auto vePoint = std::make_shared<std::string>();
    auto veD = std::make_shared<int>();
    addFieldOpt(cmdVer, veField);
    cmdVer->add_option("--point", *vePoint, "point of the projective line, e.g. (1:2)")->required();
    cmdVer->add_option("-d", *veD, "degree")->required();
    cmdVer->callback([=, &ctx] {
        auto F = parse_field_spec(*veField);
        ProjectivePoint img = veronese_map(parse_point(*F, *vePoint), *veD);
        json j;
        j["image"] = point_to_string(img);
        cli_detail::emit(ctx, "veronese", std::move(j), point_to_string(img) + "\n");
    });

    // arc
    auto* cmdArc = app.add_subcommand("arc", "arc and collinearity tests for point sets");
    auto arField = std::make_shared<std::string>();
    auto arPoints = std::make_shared<std::vector<std::string>>();
    auto arFile = std::make_shared<std::string>();
    auto arCollinear = std::make_shared<bool>(false);
    addFieldOpt(cmdArc, arField);
    cmdArc->add_option("--point", *arPoints, "point (repeatable)");
    cmdArc->add_option("--file", *arFile, "file with one point per line");
    cmdArc->add_flag("--collinear", *arCollinear, "also report the maximum collinear count (plane only)");
    cmdArc->callback([=, &ctx] {
        auto F = parse_field_spec(*arField);
        std::vector<ProjectivePoint> pts;
        for (const auto& s : *arPoints) pts.push_back(parse_point(*F, s));
        if (!arFile->empty()) {
            std::istringstream is(cli_detail::read_file(*arFile));
            std::string line;
            while (std::getline(is, line))
                if (!fmt_detail::strip_spaces(line).empty()) pts.push_back(parse_point(*F, line));
        }
        if (pts.empty()) throw std::invalid_argument("no points given");
        bool arc = is_k_arc(pts);
        json j;
        j["is_arc"] = arc;
        j["k"] = pts.size();
        std::ostringstream os;
        os << (arc ? "arc" : "not an arc") << " (k=" << pts.size() << ")\n";
        if (*arCollinear) {
            int mc = max_collinear(pts);
            j["max_collinear"] = mc;
            os << "max collinear: " << mc << "\n";
        }
        cli_detail::emit(ctx, "arc", std::move(j), os.str());
    });

    // omega
    auto* cmdOmega = app.add_subcommand("omega", "binomial nonvanishing set mod p");
    auto omJ = std::make_shared<int>(), omN = std::make_shared<int>();
    auto omP = std::make_shared<long long>();
    cmdOmega->add_option("j", *omJ)->required();
    cmdOmega->add_option("n", *omN)->required();
    cmdOmega->add_option("p", *omP)->required();
    cmdOmega->callback([=, &ctx] {
        auto s = omega_set(*omJ, *omN, *omP);
        json arr = json::array();
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (int m : s) {
            arr.push_back(m);
            os << (first ? "" : ",") << m;
            first = false;
        }
        os << "}\n";
        json j;
        j["set"] = arr;
        cli_detail::emit(ctx, "omega", std::move(j), os.str());
    });

    // psi
    auto* cmdPsi = app.add_subcommand("psi", "reflection closure j -> n-j");
    auto psN = std::make_shared<int>();
    auto psSet = std::make_shared<std::string>();
    cmdPsi->add_option("n", *psN)->required();
    cmdPsi->add_option("set", *psSet, "comma-separated subset of {0..n}")->required();
    cmdPsi->callback([=, &ctx] {
        std::set<int> J;
        for (const auto& tok : fmt_detail::split(fmt_detail::strip_spaces(*psSet), ','))
            if (!tok.empty()) J.insert(static_cast<int>(fmt_detail::parse_ll(tok)));
        auto s = psi_closure(J, *psN);
        json arr = json::array();
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (int m : s) {
            arr.push_back(m);
            os << (first ? "" : ",") << m;
            first = false;
        }
        os << "}\n";
        json j;
        j["set"] = arr;
        cli_detail::emit(ctx, "psi", std::move(j), os.str());
    });

    // rr-basis
    auto* cmdRr = app.add_subcommand("rr-basis", "basis of the Riemann-Roch space of a divisor");
    auto rrField = std::make_shared<std::string>();
    auto rrDiv = std::make_shared<std::string>();
    addFieldOpt(cmdRr, rrField);
    cmdRr->add_option("--divisor", *rrDiv, "e.g. \"2*[inf] + 1*[0]\"")->required();
    cmdRr->callback([=, &ctx] {
        auto F = parse_field_spec(*rrField);
        Divisor D = parse_divisor(*F, *rrDiv);
        auto basis = riemann_roch_basis(D);
        json arr = json::array();
        std::ostringstream os;
        for (const auto& fn : basis) {
            std::string s = poly_to_string(fn.numerator());
            if (!fn.denominator().is_one()) s += " / " + poly_to_string(fn.denominator());
            arr.push_back(s);
            os << s << "\n";
        }
        json j;
        j["divisor"] = divisor_to_string(D);
        j["degree"] = D.degree();
        j["dimension"] = basis.size();
        j["basis"] = arr;
        os << "dimension " << basis.size() << "\n";
        cli_detail::emit(ctx, "rr-basis", std::move(j), os.str());
    });

    // code
    auto* cmdCode = app.add_subcommand("code", "evaluation codes and related constructions");
    cmdCode->require_subcommand(1);

    auto* cmdEval = cmdCode->add_subcommand("eval", "evaluation code of a divisor");
    auto cvField = std::make_shared<std::string>();
    auto cvDiv = std::make_shared<std::string>();
    auto cvPoints = std::make_shared<std::string>();
    auto cvBound = std::make_shared<long long>(1'000'000);
    addFieldOpt(cmdEval, cvField);
    cmdEval->add_option("--divisor", *cvDiv)->required();
    cmdEval->add_option("--points", *cvPoints, "comma-separated points (default: all finite points off the support)");
    cmdEval->add_option("--bound", *cvBound, "exhaustion bound for the distance");
    cmdEval->callback([=, &ctx] {
        auto F = parse_field_spec(*cvField);
        Divisor D = parse_divisor(*F, *cvDiv);
        std::vector<P1Point> pts;
        if (cvPoints->empty()) {
            for (int v = 0; v < F->order(); ++v) {
                P1Point p = P1Point::finite(*F, v);
                if (D.multiplicity(p) == 0) pts.push_back(p);
            }
        } else {
            for (const auto& tok : fmt_detail::split(fmt_detail::strip_spaces(*cvPoints), ','))
                pts.push_back(cli_detail::parse_p1_point(*F, tok));
        }
        LinearCode code = evaluation_code(D, pts);
        int dist = cli_detail::distance_if_feasible(code, *cvBound);
        json j = cli_detail::code_json(code, dist);
        j["divisor"] = divisor_to_string(D);
        cli_detail::emit(ctx, "code eval", std::move(j), cli_detail::render_code(code, dist));
    });

    auto* cmdThree = cmdCode->add_subcommand("three-point", "code of a[0]+b[1]+c[inf] over GF(q^2)");
    auto tpA = std::make_shared<int>(), tpB = std::make_shared<int>(), tpC = std::make_shared<int>(),
         tpD = std::make_shared<int>();
    auto tpQ = std::make_shared<long long>();
    auto tpBound = std::make_shared<long long>(1'000'000);
    cmdThree->add_option("a", *tpA)->required();
    cmdThree->add_option("b", *tpB)->required();
    cmdThree->add_option("c", *tpC)->required();
    cmdThree->add_option("d", *tpD)->required();
    cmdThree->add_option("q", *tpQ)->required();
    cmdThree->add_option("--bound", *tpBound);
    cmdThree->callback([=, &ctx] {
        auto tpc = three_point_code(*tpA, *tpB, *tpC, *tpD, *tpQ);
        int dist = cli_detail::distance_if_feasible(tpc.code, *tpBound);
        json j = cli_detail::code_json(tpc.code, dist);
        j["divisor"] = divisor_to_string(tpc.divisor);
        j["field"] = field_spec_to_string(*tpc.field);
        cli_detail::emit(ctx, "code three-point", std::move(j), cli_detail::render_code(tpc.code, dist));
    });

    auto* cmdDist = cmdCode->add_subcommand("mindist", "exact minimum distance of a generator matrix");
    auto mdField = std::make_shared<std::string>();
    auto mdFile = std::make_shared<std::string>();
    auto mdBound = std::make_shared<long long>(1'000'000);
    addFieldOpt(cmdDist, mdField);
    cmdDist->add_option("file", *mdFile, "rows of space-separated elements")->required();
    cmdDist->add_option("--bound", *mdBound);
    cmdDist->callback([=, &ctx] {
        auto F = parse_field_spec(*mdField);
        FqMatrix gen = cli_detail::element_matrix_from_text(*F, cli_detail::read_file(*mdFile));
        LinearCode code{std::move(gen)};
        int d = min_distance(code, *mdBound);
        json j;
        j["min_distance"] = d;
        j["length"] = code.length();
        j["dimension"] = code.dimension();
        cli_detail::emit(ctx, "code mindist", std::move(j), std::to_string(d) + "\n");
    });

    auto* cmdGrass = cmdCode->add_subcommand("grassmann", "Grassmann code parameters");
    auto grN = std::make_shared<int>(), grR = std::make_shared<int>();
    auto grQ = std::make_shared<long long>();
    cmdGrass->add_option("n", *grN)->required();
    cmdGrass->add_option("r", *grR)->required();
    cmdGrass->add_option("q", *grQ)->required();
    cmdGrass->callback([=, &ctx] {
        long long p;
        int k;
        if (!is_prime_power(*grQ, p, k)) throw std::invalid_argument("q must be a prime power");
        FieldSpec F(p, k);
        auto params = grassmann_code_params(*grN, *grR, F);
        json j;
        j["length"] = params.length;
        j["dimension_formula"] = params.dimension_formula;
        j["dimension_plucker"] = params.dimension_plucker;
        std::ostringstream os;
        os << "length " << params.length << "\n";
        os << "dimension (printed binomial) " << params.dimension_formula << "\n";
        os << "dimension (Pluecker rank)    " << params.dimension_plucker << "\n";
        cli_detail::emit(ctx, "code grassmann", std::move(j), os.str());
    });

    auto* cmdOrbit = cmdCode->add_subcommand("orbit", "orbit closures of subspaces or configurations");
    auto obKind = std::make_shared<std::string>("subspace");
    auto obField = std::make_shared<std::string>();
    auto obSubspace = std::make_shared<std::string>();
    auto obGenFiles = std::make_shared<std::vector<std::string>>();
    auto obGl = std::make_shared<bool>(false);
    auto obPoints = std::make_shared<std::string>();
    auto obPerms = std::make_shared<std::vector<std::string>>();
    auto obOrdered = std::make_shared<bool>(false);
    cmdOrbit->add_option("--kind", *obKind)->check(CLI::IsMember({"subspace", "config"}));
    addFieldOpt(cmdOrbit, obField);
    cmdOrbit->add_option("--subspace", *obSubspace, "file: representative matrix, space-separated elements");
    cmdOrbit->add_option("--generator", *obGenFiles, "file with a generator matrix (repeatable)");
    cmdOrbit->add_flag("--gl", *obGl, "use standard GL(n, q) generators");
    cmdOrbit->add_option("--points", *obPoints, "file with one point per line (config mode)");
    cmdOrbit->add_option("--perm", *obPerms, "permutation as image list, e.g. 2,3,1 (repeatable)");
    cmdOrbit->add_flag("--ordered", *obOrdered, "compare configurations as ordered tuples");
    cmdOrbit->callback([=, &ctx] {
        auto F = parse_field_spec(*obField);
        json j;
        std::ostringstream os;
        if (*obKind == "subspace") {
            if (obSubspace->empty()) throw std::invalid_argument("subspace orbit needs --subspace");
            FqMatrix U = cli_detail::element_matrix_from_text(*F, cli_detail::read_file(*obSubspace));
            std::vector<FqMatrix> gens;
            for (const auto& g : *obGenFiles)
                gens.push_back(cli_detail::element_matrix_from_text(*F, cli_detail::read_file(g)));
            if (*obGl) {
                auto std_gens = general_linear_generators(*F, U.cols());
                gens.insert(gens.end(), std_gens.begin(), std_gens.end());
            }
            if (gens.empty()) throw std::invalid_argument("no generators given (use --generator or --gl)");
            auto orbit = grassmann_orbit(U, gens);
            j["orbit_size"] = orbit.size();
            os << "orbit size " << orbit.size() << "\n";
            json arr = json::array();
            for (const auto& s : orbit) {
                std::ostringstream rowos;
                for (size_t i = 0; i < s.rows(); ++i)
                    for (size_t c = 0; c < s.cols(); ++c)
                        rowos << element_to_string(*F, s.at(i, c)) << (c + 1 < s.cols() ? " " : i + 1 < s.rows() ? "; " : "");
                arr.push_back(rowos.str());
                os << rowos.str() << "\n";
            }
            j["orbit"] = arr;
        } else {
            if (obPoints->empty()) throw std::invalid_argument("config orbit needs --points");
            std::vector<ProjectivePoint> config;
            std::istringstream is(cli_detail::read_file(*obPoints));
            std::string line;
            while (std::getline(is, line))
                if (!fmt_detail::strip_spaces(line).empty()) config.push_back(parse_point(*F, line));
            std::vector<Permutation> gens;
            for (const auto& s : *obPerms) {
                std::vector<int> img;
                for (const auto& tok : fmt_detail::split(fmt_detail::strip_spaces(s), ','))
                    img.push_back(static_cast<int>(fmt_detail::parse_ll(tok)));
                gens.emplace_back(std::move(img));
            }
            if (gens.empty()) throw std::invalid_argument("no permutations given (use --perm)");
            auto orbit = configuration_orbits(config, gens,
                                              *obOrdered ? ConfigurationMode::Ordered : ConfigurationMode::Unordered);
            j["orbit_size"] = orbit.size();
            os << "orbit size " << orbit.size() << "\n";
            json arr = json::array();
            for (const auto& cfg : orbit) {
                std::ostringstream cos;
                for (size_t i = 0; i < cfg.size(); ++i) cos << (i ? " " : "") << point_to_string(cfg[i]);
                arr.push_back(cos.str());
                os << cos.str() << "\n";
            }
            j["orbit"] = arr;
        }
        cli_detail::emit(ctx, "code orbit", std::move(j), os.str());
    });

    // verify
    auto* cmdVerify = app.add_subcommand("verify", "run a named acceptance suite");
    auto vfSuite = std::make_shared<std::string>();
    auto vfDataDir = std::make_shared<std::string>("data/appendix");
    cmdVerify->add_option("suite", *vfSuite, "appendix, horn-lr, mds, arcs, snf or all")
        ->required()
        ->check(CLI::IsMember({"appendix", "horn-lr", "mds", "arcs", "snf", "all"}));
    cmdVerify->add_option("--data-dir", *vfDataDir, "directory with the golden triple files");
    cmdVerify->callback([=, &ctx] {
        std::vector<SuiteResult> suites;
        if (*vfSuite == "all")
            suites = verify_all(*vfDataDir);
        else if (*vfSuite == "appendix")
            suites = {verify_appendix(*vfDataDir)};
        else if (*vfSuite == "horn-lr")
            suites = {verify_horn_lr()};
        else if (*vfSuite == "mds")
            suites = {verify_mds()};
        else if (*vfSuite == "arcs")
            suites = {verify_arcs()};
        else
            suites = {verify_snf()};
        bool allPass = true;
        std::ostringstream os;
        json arr = json::array();
        for (const auto& s : suites) {
            allPass = allPass && s.all_pass();
            os << cli_detail::render_suite(s);
            arr.push_back(cli_detail::suite_json(s));
        }
        json j;
        j["suites"] = arr;
        j["all_pass"] = allPass;
        ctx.exit_code = allPass ? 0 : 1;
        cli_detail::emit(ctx, "verify", std::move(j), os.str());
    });

    // ---- dispatch ----
    std::vector<std::string> args(argv.rbegin(), argv.rend());  // CLI11 wants reversed args
    try {
        app.parse(args);
        if (app.get_subcommands().empty()) {
            result.status = CommandResult::Status::error;
            result.exit_code = 2;
            result.diagnostics.push_back("no subcommand given; see --help");
            result.text = app.help();
            return result;
        }
    } catch (const CLI::CallForHelp&) {
        result.text = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        result.status = CommandResult::Status::error;
        result.exit_code = 2;
        result.diagnostics.push_back(e.what());
        return result;
    } catch (const InternalError& e) {
        result.status = CommandResult::Status::error;
        result.exit_code = 3;
        result.diagnostics.push_back(std::string("internal invariant failure: ") + e.what());
        return result;
    } catch (const std::exception& e) {
        result.status = CommandResult::Status::error;
        result.exit_code = 2;
        result.diagnostics.push_back(e.what());
        return result;
    }

    result.payload = std::move(ctx.payload);
    result.exit_code = ctx.exit_code;
    if (ctx.json_out) {
        nlohmann::json doc = result.payload;
        doc["schema_version"] = kSchemaVersion;
        result.text = doc.dump(2) + "\n";
    } else {
        result.text = ctx.text;
    }
    return result;
}

}  // namespace horncode

#endif
