#include "qaff/cli.hpp"

#include "qaff/classify.hpp"
#include "qaff/construction.hpp"
#include "qaff/errors.hpp"
#include "qaff/io.hpp"
#include "qaff/relations.hpp"
#include "qaff/selfcheck.hpp"
#include "qaff/sl2.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <functional>
#include <ostream>
#include <string>

namespace qaff {

namespace {

namespace fs = std::filesystem;

std::string check_rational_text(const std::string& text) {
    try {
        parse_rational(text);
        return {};
    } catch (const ParseError&) {
        return "'" + text + "' is not a rational literal";
    }
}

std::string check_sign_text(const std::string& text) {
    if (text == "1" || text == "+1" || text == "-1") return {};
    return "'" + text + "' is not a sign (1 or -1)";
}

int do_validate(const fs::path& in, std::ostream& out) {
    const ParsedSystem sys = parse_system(read_file(in));
    const VerificationReport rep = sys.validate();
    out << render(rep);
    if (rep.passed()) {
        out << "validation: PASS\n";
        return 0;
    }
    out << "validation: FAIL (" << rep.first_failure() << ")\n";
    return 1;
}

int do_construct(const fs::path& in, const fs::path& out_path, const std::string& trace_path,
                 bool fast, std::ostream& out) {
    const RLSystem sys = parse_system(read_file(in)).admit();
    const Construction c =
        construct_module(sys, fast ? CheckLevel::fast : CheckLevel::full);
    write_file(out_path, serialize(c.module));
    if (!trace_path.empty()) write_file(trace_path, serialize(c.trace));
    out << "constructed: dim=" << sys.dim() << " diameter=" << sys.diameter() << "\n";
    return 0;
}

int do_verify(const fs::path& in, std::ostream& out) {
    const HatModule m = parse_module(read_file(in));
    const VerificationReport rep = check_hat_relations(m);
    out << render(rep);
    if (rep.passed()) {
        out << "verification: PASS\n";
        return 0;
    }
    out << "verification: FAIL (" << rep.first_failure() << ")\n";
    return 1;
}

int do_classify(const fs::path& in, std::ostream& out) {
    const BasicResult res = classify_basic(parse_module(read_file(in)));
    out << render(res.report);
    if (res.is_basic()) {
        out << "basic d=" << *res.diameter << "\n";
        return 0;
    }
    out << "not basic: " << res.report.first_failure() << "\n";
    return 1;
}

int do_extract(const fs::path& in, const fs::path& out_path, std::ostream& out) {
    const RLSystem sys = extract_system(parse_module(read_file(in)));
    write_file(out_path, serialize(sys));
    out << "extracted: dim=" << sys.dim() << " diameter=" << sys.diameter() << "\n";
    return 0;
}

int do_pieces(const fs::path& in, const fs::path& dir, std::ostream& out) {
    const HatModule m = parse_module(read_file(in));
    const PieceDecomposition dec = eight_pieces(m);
    fs::create_directories(dir);
    nlohmann::json manifest_pieces = nlohmann::json::array();
    for (const auto& [key, space] : dec.pieces) {
        nlohmann::json entry = {{"key", key.str()},
                                {"eps0", key.eps0},
                                {"eps1", key.eps1},
                                {"parity", key.odd ? "odd" : "even"},
                                {"dim", space.dim()}};
        if (!space.is_zero()) {
            const std::string file = "piece_" + key.str() + ".json";
            write_file(dir / file, serialize(restrict_module(m, space)));
            entry["file"] = file;
            out << "piece " << key.str() << ": dim=" << space.dim() << " -> " << file << "\n";
        } else {
            out << "piece " << key.str() << ": dim=0\n";
        }
        manifest_pieces.push_back(std::move(entry));
    }
    const nlohmann::json manifest = {{"dim", m.dim()},
                                     {"q", to_text(m.q.value())},
                                     {"pieces", std::move(manifest_pieces)}};
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");
    return 0;
}

int do_twist(const fs::path& in, const fs::path& out_path, int eps0, int eps1,
             std::ostream& out) {
    const HatModule m = twist(parse_module(read_file(in)), eps0, eps1);
    write_file(out_path, serialize(m));
    out << "twisted by (" << eps0 << ", " << eps1 << ")\n";
    return 0;
}

int do_generate_eval(unsigned d, const std::string& a_text, const std::string& q_text,
                     const fs::path& out_path, std::ostream& out) {
    const RLSystem sys = gen_evaluation(d, parse_rational(a_text), QParam{parse_rational(q_text)});
    write_file(out_path, serialize(sys));
    out << "generated: dim=" << sys.dim() << " diameter=" << sys.diameter() << "\n";
    return 0;
}

int do_decompose_sl2(const fs::path& in, int index, std::ostream& out) {
    const Sl2Module s = restrict_to_sl2(parse_module(read_file(in)), index);
    out << render_tags(decompose_irreducibles(s));
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact construction, verification and classification of raising/lowering "
                 "modules",
                 "qaff"};
    app.require_subcommand(1);

    std::string in_path, out_path, trace_path, dir_path;
    std::string a_text, q_text = "2", eps0_text, eps1_text;
    unsigned d = 0;
    int sl2_index = 0;
    bool fast = false;

    auto* validate_cmd = app.add_subcommand("validate", "report the clauses of a system file");
    validate_cmd->add_option("system", in_path, "system file")->required();

    auto* construct_cmd =
        app.add_subcommand("construct", "run the construction on a validated system");
    construct_cmd->add_option("system", in_path, "system file")->required();
    construct_cmd->add_option("-o,--output", out_path, "module file to write")->required();
    construct_cmd->add_option("--trace", trace_path, "also write every intermediate");
    construct_cmd->add_flag("--fast", fast, "skip the structural self-checks");

    auto* verify_cmd = app.add_subcommand("verify", "check the defining relations of a module");
    verify_cmd->add_option("module", in_path, "module file")->required();

    auto* classify_cmd = app.add_subcommand("classify", "test whether a module is basic");
    classify_cmd->add_option("module", in_path, "module file")->required();

    auto* extract_cmd =
        app.add_subcommand("extract", "recover the raising/lowering system of a basic module");
    extract_cmd->add_option("module", in_path, "module file")->required();
    extract_cmd->add_option("-o,--output", out_path, "system file to write")->required();

    auto* pieces_cmd =
        app.add_subcommand("pieces", "split a module into its eight sign/parity pieces");
    pieces_cmd->add_option("module", in_path, "module file")->required();
    pieces_cmd->add_option("-o,--output", dir_path, "directory for piece files")->required();

    auto* twist_cmd = app.add_subcommand("twist", "apply a sign twist to a module");
    twist_cmd->add_option("module", in_path, "module file")->required();
    twist_cmd->add_option("--eps0", eps0_text, "sign for index 0")
        ->required()
        ->check(check_sign_text);
    twist_cmd->add_option("--eps1", eps1_text, "sign for index 1")
        ->required()
        ->check(check_sign_text);
    twist_cmd->add_option("-o,--output", out_path, "module file to write")->required();

    auto* generate_cmd = app.add_subcommand("generate", "produce example systems");
    generate_cmd->require_subcommand(1);
    auto* eval_cmd = generate_cmd->add_subcommand("eval", "evaluation-type system");
    eval_cmd->add_option("--d", d, "diameter")->required();
    eval_cmd->add_option("--a", a_text, "nonzero evaluation parameter")
        ->required()
        ->check(check_rational_text);
    eval_cmd->add_option("--q", q_text, "deformation parameter (default 2)")
        ->check(check_rational_text);
    eval_cmd->add_option("-o,--output", out_path, "system file to write")->required();

    auto* decompose_cmd =
        app.add_subcommand("decompose-sl2", "split an sl2 restriction into irreducibles");
    decompose_cmd->add_option("module", in_path, "module file")->required();
    decompose_cmd->add_option("--i", sl2_index, "restriction index, 0 or 1")
        ->check(CLI::Range(0, 1));

    auto* selfcheck_cmd =
        app.add_subcommand("selfcheck", "run the built-in acceptance suite");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(validate_cmd)) return do_validate(in_path, out);
        if (app.got_subcommand(construct_cmd))
            return do_construct(in_path, out_path, trace_path, fast, out);
        if (app.got_subcommand(verify_cmd)) return do_verify(in_path, out);
        if (app.got_subcommand(classify_cmd)) return do_classify(in_path, out);
        if (app.got_subcommand(extract_cmd)) return do_extract(in_path, out_path, out);
        if (app.got_subcommand(pieces_cmd)) return do_pieces(in_path, dir_path, out);
        if (app.got_subcommand(twist_cmd))
            return do_twist(in_path, out_path, std::stoi(eps0_text), std::stoi(eps1_text), out);
        if (app.got_subcommand(generate_cmd))
            return do_generate_eval(d, a_text, q_text, out_path, out);
        if (app.got_subcommand(decompose_cmd)) return do_decompose_sl2(in_path, sl2_index, out);
        if (app.got_subcommand(selfcheck_cmd)) return selfcheck(out) ? 0 : 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        err << render(e.report);
        err << "validation failed (" << e.report.first_failure() << ")\n";
        return 1;
    } catch (const LemmaError& e) {
        err << "self-check failed: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace qaff
