#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "seshadri/certificate_io.hpp"

using namespace seshadri;

namespace {

struct OutputOptions {
    std::string path;
    bool pretty = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--out", out.path, "write the document to this file instead of stdout");
    cmd->add_flag("--pretty", out.pretty, "render a human-readable table instead of JSON");
}

int emit(const Json& doc, const OutputOptions& out) {
    if (!doc.at("verified").get<bool>()) {
        std::cerr << "error: in-process verification failed before emission\n";
        std::cout << dump_document(doc);
        return 3;
    }
    std::string text = out.pretty ? render_pretty(doc) : dump_document(doc);
    if (!out.path.empty()) {
        std::ofstream f(out.path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open '" << out.path << "' for writing\n";
            return 2;
        }
        f << text;
    } else {
        std::cout << text;
    }
    return 0;
}

int emit_domain_error(const DomainError& e) {
    Json err{{"error", Json{{"code", e.code()}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 2;
}

Int parse_int(const std::string& text, const char* what) {
    try {
        return Int(text, 10);
    } catch (const std::invalid_argument&) {
        throw DomainError("bad_integer", std::string("cannot parse ") + what + ": '" + text + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Seshadri-constant bounds and machine-checkable certificates"};
    app.require_subcommand(1);

    // surface
    auto* surface = app.add_subcommand(
        "surface", "two-sided bounds and a lower-bound certificate on a rank-1 surface");
    std::string l2_arg, alpha_arg;
    OutputOptions surface_out;
    surface->add_option("--l2", l2_arg, "self-intersection L^2 of the ample generator")
        ->required();
    surface->add_option("--alpha", alpha_arg,
                        "integer certificate level, default floor(sqrt(L^2))");
    add_output_options(surface, surface_out);

    // abelian
    auto* abelian =
        app.add_subcommand("abelian", "upper bounds for epsilon(Theta,x) on abelian varieties");
    unsigned g = 0;
    std::string kind;
    OutputOptions abelian_out;
    abelian->add_option("--g", g, "dimension g >= 2")->required();
    abelian
        ->add_option("--kind", kind,
                     "hyperelliptic (Jacobian bound 2g/(g+1)), general (theta-image bound), or "
                     "ppas-exact (the exact g = 2 value)")
        ->required()
        ->check(CLI::IsMember({"hyperelliptic", "general", "ppas-exact"}));
    add_output_options(abelian, abelian_out);

    // scan
    auto* scan = app.add_subcommand("scan", "exhaustive exact-arithmetic scans");
    scan->require_subcommand(1);
    long cap = 1000000;  // pair cap shared by both scans

    auto* floor_cmd =
        scan->add_subcommand("floor", "floor-of-square-root bound at multiples nu*Theta, g = 2");
    std::string from_arg, to_arg;
    OutputOptions floor_out;
    floor_cmd->add_option("--from", from_arg, "first nu")->required();
    floor_cmd->add_option("--to", to_arg, "last nu")->required();
    floor_cmd->add_option("--cap", cap, "maximum number of scanned values");
    add_output_options(floor_cmd, floor_out);

    auto* violation_cmd = scan->add_subcommand(
        "violation", "brute-force search for curves violating the lower-bound certificate");
    std::string vl2_arg, valpha_arg, dmax_arg, mmax_arg;
    OutputOptions violation_out;
    violation_cmd->add_option("--l2", vl2_arg, "L^2")->required();
    violation_cmd->add_option("--alpha", valpha_arg, "bound level alpha")->required();
    violation_cmd->add_option("--dmax", dmax_arg, "degree range")->required();
    violation_cmd->add_option("--mmax", mmax_arg, "multiplicity range")->required();
    violation_cmd->add_option("--cap", cap, "maximum number of scanned pairs");
    add_output_options(violation_cmd, violation_out);

    // reproduce-paper
    auto* reproduce =
        app.add_subcommand("reproduce-paper", "fixed table of all headline values, verified");
    OutputOptions reproduce_out;
    add_output_options(reproduce, reproduce_out);

    // verify
    auto* verify = app.add_subcommand("verify", "replay a previously emitted document");
    std::string verify_path;
    verify->add_option("file", verify_path, "document path; stdin when omitted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (surface->parsed()) {
            Int l2 = parse_int(l2_arg, "--l2");
            std::optional<Int> alpha;
            if (!alpha_arg.empty()) alpha = parse_int(alpha_arg, "--alpha");
            return emit(surface_document(l2, alpha), surface_out);
        }

        if (abelian->parsed()) {
            return emit(abelian_document(g, kind), abelian_out);
        }

        if (floor_cmd->parsed()) {
            Int from = parse_int(from_arg, "--from");
            Int to = parse_int(to_arg, "--to");
            Int count = to - from + 1;
            if (count > Int(cap))
                throw DomainError("cap_exceeded",
                                  "scan range exceeds cap of " + std::to_string(cap) +
                                      " values; raise --cap to allow");
            return emit(floor_scan_document(from, to), floor_out);
        }

        if (violation_cmd->parsed()) {
            Int l2 = parse_int(vl2_arg, "--l2");
            Int alpha = parse_int(valpha_arg, "--alpha");
            Int dmax = parse_int(dmax_arg, "--dmax");
            Int mmax = parse_int(mmax_arg, "--mmax");
            Int pairs = dmax * mmax;
            if (pairs > Int(cap))
                throw DomainError("cap_exceeded",
                                  "scan box exceeds cap of " + std::to_string(cap) +
                                      " pairs; raise --cap to allow");
            return emit(violation_scan_document(l2, alpha, dmax, mmax), violation_out);
        }

        if (reproduce->parsed()) {
            return emit(reproduce_paper_document(), reproduce_out);
        }

        if (verify->parsed()) {
            std::string text;
            if (verify_path.empty()) {
                std::ostringstream buf;
                buf << std::cin.rdbuf();
                text = buf.str();
            } else {
                std::ifstream f(verify_path, std::ios::binary);
                if (!f) throw DomainError("bad_file", "cannot read '" + verify_path + "'");
                std::ostringstream buf;
                buf << f.rdbuf();
                text = buf.str();
            }
            Json doc = Json::parse(text, nullptr, true);
            ReverifyResult r = reverify_document(doc);
            Json verdict{{"verify", r.ok ? "ok" : "failed"}};
            if (!r.ok) verdict["reason"] = r.reason;
            std::cout << verdict.dump(2) << "\n";
            return r.ok ? 0 : 3;
        }
    } catch (const DomainError& e) {
        return emit_domain_error(e);
    } catch (const Json::parse_error& e) {
        Json err{{"error", Json{{"code", "bad_json"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }

    return 2;
}
