#include "qrep/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "qrep/tensorbox.hpp"

namespace qrep {

namespace {

using detail::Json;

struct Options {
    std::vector<std::string> quiver_files;
    std::string rep_file;
    std::string profile_file;
    std::string field;
    std::vector<std::string> vertices;
    std::uint64_t degree = 0;
    std::uint64_t max_degree = 0;
    std::uint64_t k = 1;
    std::string format = "json";
    std::string r_gorenstein;
    std::string dom_dim_r;
};

struct Loaded {
    std::vector<BoundQuiver> quivers;
    std::vector<std::shared_ptr<const Quiver>> quiver_ptrs;
    std::optional<Representation> rep;
    std::optional<RingProfile> profile;
    Json inputs = Json::object();
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Json quiver_digest(const std::string& file, const BoundQuiver& bq) {
    Json j;
    j["file"] = file;
    j["name"] = bq.quiver.name();
    j["vertices"] = bq.quiver.vertex_count();
    j["arrows"] = bq.quiver.arrow_count();
    if (!bq.relations.empty()) j["relations"] = bq.relations.size();
    return j;
}

// Loads the files named by the options; the representation may reference the
// first loaded quiver (or, for flatten, the given context) by name.
Loaded load(const Options& opt, std::shared_ptr<const Quiver> rep_context = nullptr) {
    Loaded loaded;
    Json quiver_inputs = Json::array();
    for (const auto& file : opt.quiver_files) {
        loaded.quivers.push_back(parse_bound_quiver_file(file));
        loaded.quiver_ptrs.push_back(std::make_shared<const Quiver>(loaded.quivers.back().quiver));
        quiver_inputs.push_back(quiver_digest(file, loaded.quivers.back()));
    }
    if (quiver_inputs.size() == 1) {
        loaded.inputs["quiver"] = quiver_inputs[0];
    } else if (!quiver_inputs.empty()) {
        loaded.inputs["quivers"] = quiver_inputs;
    }
    if (!opt.rep_file.empty()) {
        if (!rep_context && !loaded.quiver_ptrs.empty()) rep_context = loaded.quiver_ptrs.front();
        loaded.rep = representation_from_json(read_file(opt.rep_file), opt.rep_file, rep_context);
        if (!opt.field.empty() && Field::parse(opt.field) != loaded.rep->field()) {
            throw InputError("--field " + opt.field + " does not match the representation's field " +
                             loaded.rep->field().to_string());
        }
        Json j;
        j["file"] = opt.rep_file;
        j["field"] = loaded.rep->field().to_string();
        j["total_dim"] = loaded.rep->total_dim();
        loaded.inputs["rep"] = std::move(j);
    }
    if (!opt.profile_file.empty()) {
        loaded.profile = RingProfile::from_json_file(opt.profile_file);
        Json j;
        j["file"] = opt.profile_file;
        j["name"] = loaded.profile->name();
        loaded.inputs["profile"] = std::move(j);
    }
    return loaded;
}

Json make_report(const std::string& command, Json inputs, Json result,
                 std::vector<std::string> warnings = {}) {
    Json report;
    report["command"] = command;
    report["inputs"] = std::move(inputs);
    report["result"] = std::move(result);
    report["warnings"] = warnings;
    return report;
}

VertexId named_vertex(const Quiver& q, const std::string& name) { return q.vertex(name); }

Json vertex_list(const Quiver& q, const std::vector<VertexId>& vs) {
    Json j = Json::array();
    for (VertexId v : vs) j.push_back(q.vertex_name(v));
    return j;
}

Json path_to_json(const Quiver& q, const Path& p) {
    Json j;
    j["source"] = q.vertex_name(p.source());
    j["target"] = q.vertex_name(p.target());
    j["length"] = p.length();
    Json arrows = Json::array();
    for (ArrowId a : p.arrows()) arrows.push_back(q.arrow(a).name);
    j["arrows"] = std::move(arrows);
    j["text"] = p.to_text(q);
    return j;
}

Json cmd_validate(const Options& opt) {
    Loaded loaded = load(opt);
    const Quiver& q = loaded.quivers.at(0).quiver;
    Diagnostics d = validate(q);
    Json result;
    result["acyclic"] = d.acyclic;
    result["connected"] = d.connected;
    result["sinks"] = vertex_list(q, d.sinks);
    result["sources"] = vertex_list(q, d.sources);
    return make_report("validate", loaded.inputs, result);
}

Json cmd_paths(const Options& opt) {
    Loaded loaded = load(opt);
    const Quiver& q = loaded.quivers.at(0).quiver;
    if (opt.vertices.size() != 2) {
        throw InputError("paths needs --vertex <source> --vertex <target>");
    }
    VertexId v = named_vertex(q, opt.vertices[0]);
    VertexId w = named_vertex(q, opt.vertices[1]);
    loaded.inputs["source"] = opt.vertices[0];
    loaded.inputs["target"] = opt.vertices[1];
    std::vector<Path> paths = enumerate_paths(q, v, w);
    Json result;
    result["count"] = paths.size();
    Json list = Json::array();
    for (const Path& p : paths) list.push_back(path_to_json(q, p));
    result["paths"] = std::move(list);
    return make_report("paths", loaded.inputs, result);
}

Json cmd_partition(const Options& opt) {
    Loaded loaded = load(opt);
    const Quiver& q = loaded.quivers.at(0).quiver;
    VertexPartition p = vertex_partition(q);
    Json levels = Json::array();
    for (const auto& level : p.levels) levels.push_back(vertex_list(q, level));
    Json result;
    result["levels"] = std::move(levels);
    result["longest_path_length"] = longest_path_length(q);
    return make_report("partition", loaded.inputs, result);
}

Json cmd_envelope(const Options& opt) {
    Loaded loaded = load(opt);
    if (!loaded.rep) throw InputError("envelope needs --rep FILE");
    EnvelopeResult env = injective_envelope(*loaded.rep);
    Json result;
    result["envelope"] = detail::rep_to_json(env.envelope);
    result["embedding"] = detail::morphism_comps_to_json(env.embedding);
    Json socle_dims;
    SubRepresentation soc = socle(*loaded.rep);
    const Quiver& q = loaded.rep->quiver();
    for (VertexId v = 0; v < q.vertex_count(); ++v) socle_dims[q.vertex_name(v)] = soc.rep.dim(v);
    result["socle_dims"] = std::move(socle_dims);
    return make_report("envelope", loaded.inputs, result);
}

Json cmd_precover(const Options& opt) {
    Loaded loaded = load(opt);
    if (!loaded.rep) throw InputError("precover needs --rep FILE");
    PrecoverResult pre = projective_precover(*loaded.rep);
    Json result;
    result["cover"] = detail::rep_to_json(pre.cover);
    result["projection"] = detail::morphism_comps_to_json(pre.projection);
    return make_report("precover", loaded.inputs, result);
}

Json cmd_resolve_rep(const Options& opt) {
    Loaded loaded = load(opt);
    if (!loaded.rep) throw InputError("resolve-rep needs --rep FILE");
    std::uint64_t max_degree = opt.max_degree ? opt.max_degree : 2;
    auto steps = min_injective_resolution(*loaded.rep, max_degree);
    loaded.inputs["max_degree"] = max_degree;
    Json terms = Json::array();
    for (std::size_t i = 0; i < steps.size(); ++i) {
        Json t;
        t["degree"] = i;
        t["term"] = detail::rep_to_json(steps[i].term);
        t["map"] = detail::morphism_comps_to_json(steps[i].map);
        terms.push_back(std::move(t));
    }
    Json result;
    result["terms"] = std::move(terms);
    return make_report("resolve-rep", loaded.inputs, result);
}

Json cmd_resolve_algebra(const Options& opt) {
    Loaded loaded = load(opt);
    if (!loaded.profile) throw InputError("resolve-algebra needs --profile FILE");
    const Quiver& q = loaded.quivers.at(0).quiver;
    std::uint64_t max_degree = opt.max_degree ? opt.max_degree : 3;
    loaded.inputs["max_degree"] = max_degree;
    auto terms = algebra_resolution(q, *loaded.profile, max_degree);
    Json list = Json::array();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        Json t;
        t["degree"] = i;
        t["summands"] = detail::formal_to_json(q, terms[i]);
        t["fd_upper_bound"] = detail::extnat_to_json(fd_bound(q, terms[i], *loaded.profile));
        list.push_back(std::move(t));
    }
    Json result;
    result["profile"] = loaded.profile->name();
    result["terms"] = std::move(list);
    return make_report("resolve-algebra", loaded.inputs, result);
}

Json cmd_gorenstein(const Options& opt) {
    Loaded loaded = load(opt);
    const Quiver& q = loaded.quivers.at(0).quiver;
    if (opt.r_gorenstein != "true" && opt.r_gorenstein != "false") {
        throw InputError("gorenstein needs --r-gorenstein true|false");
    }
    loaded.inputs["r_gorenstein"] = opt.r_gorenstein == "true";
    loaded.inputs["k"] = opt.k;
    bool result = is_k_gorenstein(q, opt.r_gorenstein == "true", opt.k);
    return make_report("gorenstein", loaded.inputs, Json(result));
}

Json cmd_quasi_gorenstein(const Options& opt) {
    Loaded loaded = load(opt);
    if (!loaded.profile) throw InputError("quasi-gorenstein needs --profile FILE");
    const Quiver& q = loaded.quivers.at(0).quiver;
    loaded.inputs["k"] = opt.k;
    TriBool result = is_quasi_k_gorenstein_sufficient(q, *loaded.profile, opt.k);
    Json value;
    std::vector<std::string> warnings;
    if (result == TriBool::True) {
        value = true;
    } else if (result == TriBool::False) {
        value = false;
        warnings.push_back("sufficient criterion not satisfied; this does not refute the property");
    } else {
        value = "unknown";
    }
    return make_report("quasi-gorenstein", loaded.inputs, value, warnings);
}

Json cmd_domdim(const Options& opt) {
    Loaded loaded = load(opt);
    const Quiver& q = loaded.quivers.at(0).quiver;
    if (opt.dom_dim_r.empty()) throw InputError("domdim needs --dom-dim-r N|infinite");
    ExtNat r = ExtNat::parse(opt.dom_dim_r);
    loaded.inputs["dom_dim_r"] = detail::extnat_to_json(r);
    DomDimResult result = dominant_dimension(q, r);
    std::vector<std::string> warnings;
    if (result.beyond_stated_range) {
        warnings.push_back(
            "single-vertex quiver: result is dom.dim R itself, outside the stated n > 1 range");
    }
    return make_report("domdim", loaded.inputs, detail::extnat_to_json(result.value), warnings);
}

Json cmd_gnc_locate(const Options& opt) {
    Loaded loaded = load(opt);
    const Quiver& q = loaded.quivers.at(0).quiver;
    if (opt.vertices.size() != 1) throw InputError("gnc-locate needs exactly one --vertex");
    VertexId v = named_vertex(q, opt.vertices[0]);
    loaded.inputs["vertex"] = opt.vertices[0];
    loaded.inputs["degree"] = opt.degree;
    GncLocation loc = gnc_summand_locator(q, v, opt.degree);
    Json result;
    result["vertex"] = q.vertex_name(loc.vertex);
    result["degree"] = loc.degree;
    return make_report("gnc-locate", loaded.inputs, result);
}

Json cmd_tensor(const Options& opt) {
    Loaded loaded = load(opt);
    if (loaded.quivers.size() != 2) throw InputError("tensor needs --quiver FILE twice");
    const BoundQuiver& a = loaded.quivers[0];
    const BoundQuiver& b = loaded.quivers[1];
    TensorQuiver t = tensor_product(a.quiver, a.relations, b.quiver, b.relations);
    Json result;
    result["vertices"] = t.product->vertex_count();
    result["arrows"] = t.product->arrow_count();
    result["relations"] = t.relations.size();
    result["text"] = t.to_text();
    return make_report("tensor", loaded.inputs, result);
}

Json cmd_flatten(const Options& opt) {
    if (opt.quiver_files.size() != 2) throw InputError("flatten needs --quiver FILE twice");
    Options factors_only = opt;
    factors_only.rep_file.clear();
    Loaded loaded = load(factors_only);
    const BoundQuiver& a = loaded.quivers[0];
    const BoundQuiver& b = loaded.quivers[1];
    TensorQuiver t = tensor_product(a.quiver, a.relations, b.quiver, b.relations);
    if (opt.rep_file.empty()) throw InputError("flatten needs --rep FILE");
    Representation m = representation_from_json(read_file(opt.rep_file), opt.rep_file, t.product);
    if (!opt.field.empty() && Field::parse(opt.field) != m.field()) {
        throw InputError("--field does not match the representation's field");
    }
    Json rep_digest;
    rep_digest["file"] = opt.rep_file;
    rep_digest["field"] = m.field().to_string();
    rep_digest["total_dim"] = m.total_dim();
    loaded.inputs["rep"] = std::move(rep_digest);
    FlattenedRep flat = flatten(t, m);
    Json vertex_reps;
    for (VertexId v = 0; v < t.first->vertex_count(); ++v) {
        Json r = detail::rep_to_json(flat.vertex_reps[v]);
        r.erase("quiver");
        vertex_reps[t.first->vertex_name(v)] = std::move(r);
    }
    Json arrow_maps;
    for (ArrowId alpha = 0; alpha < t.first->arrow_count(); ++alpha) {
        arrow_maps[t.first->arrow(alpha).name] = detail::morphism_comps_to_json(flat.arrow_maps[alpha]);
    }
    Json result;
    result["vertex_reps"] = std::move(vertex_reps);
    result["arrow_maps"] = std::move(arrow_maps);
    return make_report("flatten", loaded.inputs, result);
}

void render_text(const Json& value, const std::string& prefix, std::ostream& out) {
    if (value.is_object()) {
        for (const auto& [key, child] : value.items()) {
            if (child.is_object() || child.is_array()) {
                out << prefix << key << ":\n";
                render_text(child, prefix + "  ", out);
            } else {
                out << prefix << key << ": " << (child.is_string() ? child.get<std::string>() : child.dump())
                    << "\n";
            }
        }
    } else if (value.is_array()) {
        for (const auto& child : value) {
            if (child.is_object() || child.is_array()) {
                out << prefix << "-\n";
                render_text(child, prefix + "  ", out);
            } else {
                out << prefix << "- "
                    << (child.is_string() ? child.get<std::string>() : child.dump()) << "\n";
            }
        }
    } else {
        out << prefix << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

void emit(const Json& report, const std::string& format, std::ostream& out) {
    if (format == "text") {
        render_text(report, "", out);
    } else {
        out << report.dump(2) << "\n";
    }
}

struct Invocation {
    Options options;
    std::string command;
    std::string batch_file;
};

struct HelpRequested {
    std::string text;
};

// Parses argv into a single command; throws CLI::ParseError subclasses on
// malformed flags and HelpRequested on --help.
Invocation parse_args(const std::vector<std::string>& args) {
    Invocation inv;
    CLI::App app{"exact computations with representations of finite acyclic quivers"};
    app.require_subcommand(0, 1);
    app.add_option("--batch", inv.batch_file, "run commands from FILE, one per line");
    app.add_option("--format", inv.options.format, "json|text")->check(CLI::IsMember({"json", "text"}));

    static const std::vector<std::string> names = {
        "validate", "paths",  "partition",        "envelope", "precover",
        "resolve-rep", "resolve-algebra", "gorenstein", "quasi-gorenstein", "domdim",
        "gnc-locate", "tensor", "flatten"};
    for (const auto& name : names) {
        CLI::App* sub = app.add_subcommand(name);
        Options& o = inv.options;
        sub->add_option("--quiver", o.quiver_files, "quiver text file (repeat for two factors)");
        sub->add_option("--rep", o.rep_file, "representation JSON file");
        sub->add_option("--profile", o.profile_file, "ring profile JSON file");
        sub->add_option("--field", o.field, "q | f:<p>; cross-checked against --rep");
        sub->add_option("--vertex", o.vertices, "vertex id (repeat for source/target pairs)");
        sub->add_option("--degree", o.degree, "resolution degree");
        sub->add_option("--max-degree", o.max_degree, "resolve up to this degree");
        sub->add_option("--k", o.k, "Gorenstein index k");
        sub->add_option("--format", o.format, "json|text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--r-gorenstein", o.r_gorenstein, "whether R is k-Gorenstein (true|false)")
            ->check(CLI::IsMember({"true", "false"}));
        sub->add_option("--dom-dim-r", o.dom_dim_r, "dominant dimension of R (N|infinite)");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    }
    for (const auto& name : names) {
        if (app.got_subcommand(name)) {
            inv.command = name;
            break;
        }
    }
    return inv;
}

Json dispatch(const Invocation& inv) {
    const Options& o = inv.options;
    if (inv.command == "validate") return cmd_validate(o);
    if (inv.command == "paths") return cmd_paths(o);
    if (inv.command == "partition") return cmd_partition(o);
    if (inv.command == "envelope") return cmd_envelope(o);
    if (inv.command == "precover") return cmd_precover(o);
    if (inv.command == "resolve-rep") return cmd_resolve_rep(o);
    if (inv.command == "resolve-algebra") return cmd_resolve_algebra(o);
    if (inv.command == "gorenstein") return cmd_gorenstein(o);
    if (inv.command == "quasi-gorenstein") return cmd_quasi_gorenstein(o);
    if (inv.command == "domdim") return cmd_domdim(o);
    if (inv.command == "gnc-locate") return cmd_gnc_locate(o);
    if (inv.command == "tensor") return cmd_tensor(o);
    if (inv.command == "flatten") return cmd_flatten(o);
    throw InputError("no subcommand given (try --help)");
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    return tokens;
}

int run_one(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_batch(const Invocation& inv, std::ostream& out, std::ostream& err) {
    std::ifstream in(inv.batch_file);
    if (!in) {
        err << "error: cannot open batch file '" << inv.batch_file << "'\n";
        return 2;
    }
    Json reports = Json::array();
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::vector<std::string> tokens = split_line(line);
        if (tokens.empty()) continue;
        std::ostringstream line_out;
        int code = run_one(tokens, line_out, err);
        if (code != 0) {
            err << "error: batch line " << line_no << " failed with exit code " << code << "\n";
            return code;
        }
        reports.push_back(detail::parse_document(line_out.str(), inv.batch_file));
    }
    if (inv.options.format == "text") {
        render_text(reports, "", out);
    } else {
        out << reports.dump(2) << "\n";
    }
    return 0;
}

int run_one(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Invocation inv;
    try {
        inv = parse_args(args);
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        if (!inv.batch_file.empty()) {
            if (!inv.command.empty()) throw InputError("--batch cannot be combined with a subcommand");
            return run_batch(inv, out, err);
        }
        Json report = dispatch(inv);
        emit(report, inv.options.format, out);
        return 0;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return run_one(args, out, err);
}

}  // namespace qrep
