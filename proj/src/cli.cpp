#include "symplobs/cli.hpp"

#include <filesystem>
#include <fstream>

#include <CLI11.hpp>

#include "symplobs/document.hpp"
#include "symplobs/error.hpp"

namespace symplobs::cli {

namespace {

Coeffs parse_coeff_list(const std::string& text)
{
    Coeffs out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto pos = text.find(',', start);
        const std::string item = text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
        out.push_back(parse_coeff(item));
        if (pos == std::string::npos)
            break;
        start = pos + 1;
    }
    return out;
}

Manifold4 load_manifold4(const std::string& ref)
{
    if (std::filesystem::is_regular_file(ref)) {
        Document d = load_document(ref);
        if (const auto* m = std::get_if<Manifold4>(&d.payload))
            return *m;
        throw InputError(ref + ": expected a manifold4 document, got " + to_string(d.kind));
    }
    Manifold m = resolve_manifold_ref(ref);
    if (const auto* m4 = std::get_if<Manifold4>(&m))
        return *m4;
    throw InputError("'" + ref + "' is not a 4-manifold");
}

GradedRing load_ring(const std::string& ref)
{
    if (!std::filesystem::is_regular_file(ref)) {
        const auto names = ring_fixture_names();
        if (std::find(names.begin(), names.end(), ref) != names.end())
            return ring_fixture(ref);
        throw InputError("cannot open " + ref);
    }
    Document d = load_document(ref);
    if (const auto* r = std::get_if<GradedRing>(&d.payload))
        return *r;
    throw InputError(ref + ": expected a ring document, got " + to_string(d.kind));
}

void write_output(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw InputError("cannot write " + path);
    f << text;
}

void emit_report(const ObstructionReport& r, const std::string& format, std::ostream& out, bool color)
{
    out << (format == "json" ? render_report_json(r) : render_report_text(r, color));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunOptions& opts)
{
    CLI::App app{"Obstruction checks for symplectic Lie algebroid structures on manifold pairs",
                 args.empty() ? "symplobs" : args[0]};
    app.require_subcommand(1);

    std::string check_file, kind_text = "bk", format = "text";
    std::int64_t bound = kDefaultWuBound;
    bool lenient = false;
    auto* check = app.add_subcommand("check", "Run every applicable obstruction test on a pair or split file");
    check->add_option("pair-file", check_file, "pair or split document")->required();
    check->add_option("--kind", kind_text, "bk:K | bk | log | zero | scattering | elliptic | elliptic-log");
    check->add_option("--bound", bound, "box bound for the characteristic-class search")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{1000000}));
    check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    check->add_flag("--lenient", lenient, "warn on unknown fields instead of rejecting them");

    std::string catalog_name;
    bool catalog_ring = false;
    auto* catalog = app.add_subcommand("catalog", "List catalog entries or print one as a document");
    catalog->add_option("name", catalog_name, "catalog entry or connected-sum expression");
    catalog->add_flag("--ring", catalog_ring, "look up a cohomology ring fixture instead");

    std::string sum_a, sum_b, sum_out;
    auto* sum = app.add_subcommand("sum", "Connected sum of two 4-manifolds");
    sum->add_option("m1", sum_a, "catalog name, expression or manifold4 file")->required();
    sum->add_option("m2", sum_b, "catalog name, expression or manifold4 file")->required();
    sum->add_option("-o,--output", sum_out, "write the document here instead of stdout");

    std::string ring_file, a_text, b_text;
    std::size_t cert_n = 0;
    auto* cert = app.add_subcommand("certificate", "Verify a cup-product certificate (a, b)");
    cert->add_option("ring-file", ring_file, "ring document or fixture name")->required();
    cert->add_option("--a", a_text, "comma-separated degree-2 coefficients of a")->required();
    cert->add_option("--b", b_text, "comma-separated degree-2 coefficients of b")->required();
    cert->add_option("--n", cert_n, "half the top degree")->required();
    cert->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string fmt_file, fmt_out;
    auto* fmt = app.add_subcommand("fmt", "Rewrite a document in canonical form");
    fmt->add_option("file", fmt_file, "document")->required();
    fmt->add_option("-o,--output", fmt_out, "write here instead of stdout");
    fmt->add_flag("--lenient", lenient, "drop unknown fields instead of rejecting them");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (check->parsed()) {
            Document d = load_document(check_file, ParseOptions{lenient});
            for (const auto& w : d.warnings)
                err << "warning: " << w << "\n";
            if (const auto* split = std::get_if<SplitData>(&d.payload)) {
                const AlgebroidKind kind = parse_kind(kind_text);
                if (kind != AlgebroidKind{KindBk{1}})
                    throw InputError("split documents are checked for log-symplectic structures (bk:1)");
                const auto r = split_report(*split, std::filesystem::path(check_file).stem().string());
                emit_report(r, format, out, opts.color);
                return exit_code(r.overall);
            }
            const auto* pair = std::get_if<LogPairData>(&d.payload);
            if (!pair)
                throw InputError(check_file + ": expected a pair or split document, got " + to_string(d.kind));
            const auto r = full_report(*pair, parse_kind(kind_text, pair->k), bound);
            emit_report(r, format, out, opts.color);
            return exit_code(r.overall);
        }
        if (catalog->parsed()) {
            if (catalog_name.empty()) {
                for (const auto& n : catalog_ring ? ring_fixture_names() : catalog_names())
                    out << n << "\n";
                return 0;
            }
            if (catalog_ring) {
                out << render_document(make_document(ring_fixture(catalog_name)));
                return 0;
            }
            const Manifold m = resolve_manifold_ref(catalog_name);
            out << render_document(std::visit([](const auto& x) { return make_document(x); }, m));
            return 0;
        }
        if (sum->parsed()) {
            const Manifold4 m = connected_sum(load_manifold4(sum_a), load_manifold4(sum_b));
            write_output(render_document(make_document(m)), sum_out, out);
            return 0;
        }
        if (cert->parsed()) {
            const GradedRing ring = load_ring(ring_file);
            const RingClass a = ring.make(2, parse_coeff_list(a_text));
            const RingClass b = ring.make(2, parse_coeff_list(b_text));
            ObstructionReport r;
            r.subject = ring_file;
            r.kind = "bk:1";
            r.verdicts.push_back(check_cup_certificate(ring, a, b, cert_n));
            r.overall = aggregate(r.verdicts);
            emit_report(r, format, out, opts.color);
            return exit_code(r.overall);
        }
        if (fmt->parsed()) {
            Document d = load_document(fmt_file, ParseOptions{lenient});
            for (const auto& w : d.warnings)
                err << "warning: " << w << "\n";
            write_output(render_document(d), fmt_out, out);
            return 0;
        }
    } catch (const ParseError& e) {
        for (const auto& s : e.errors())
            err << "error: " << s << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

} // namespace symplobs::cli
