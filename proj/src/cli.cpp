#include "simplicial/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "simplicial/catalog.hpp"
#include "simplicial/chain_operators.hpp"
#include "simplicial/covers.hpp"
#include "simplicial/cup_product.hpp"
#include "simplicial/exact_sequences.hpp"
#include "simplicial/space_format.hpp"
#include "simplicial/subdivision.hpp"

namespace simplicial {

namespace {

struct Options {
    std::string space, file, coeff = "Z", group, sub, sub_a, sub_b, with, faces, images, format = "text";
    int dim = -1, base = 0, k = -1;
    long seed = 0;
    bool timing = false;
};

struct Input {
    SetPtr set;
    std::string name;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Input load(const Options& o) {
    if (o.space.empty() == o.file.empty()) throw std::invalid_argument("give exactly one of --space and --file");
    if (!o.space.empty()) return {catalog(o.space), o.space};
    auto doc = parse_document(read_file(o.file));
    return {share(std::move(doc.set)), doc.name.empty() ? o.file : doc.name};
}

std::string join_groups(const std::vector<AbelianGroup>& gs) {
    std::string out;
    for (std::size_t i = 0; i < gs.size(); ++i) out += (i ? ", " : "") + gs[i].to_string();
    return out;
}

std::string counts(const SimplicialSet& k) {
    std::string out = "(";
    auto c = k.counts();
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
    return out + ")";
}

void add_lines(RunReport& r, const std::string& text) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) r.details.push_back(line);
}

Integer ring_modulus(const std::string& coeff) {
    auto g = AbelianGroup::parse(coeff);
    if (g.betti() == 1 && g.torsion().empty()) return 0;
    if (g.betti() == 0 && g.torsion().size() == 1) return g.torsion()[0];
    throw std::invalid_argument("coefficient ring must be Z or Z/d, got '" + coeff + "'");
}

FiniteGroup load_group(const std::string& spec) {
    if (spec.empty()) return FiniteGroup::cyclic(2);
    auto number = [&](std::size_t from) {
        const std::string digits = spec.substr(from);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
            throw std::invalid_argument("bad group '" + spec + "'");
        return std::stoi(digits);
    };
    if (spec.rfind("Z/", 0) == 0) return FiniteGroup::cyclic(number(2));
    if (spec.rfind("cyclic:", 0) == 0) return FiniteGroup::cyclic(number(7));
    if (spec.rfind("symmetric:", 0) == 0) return FiniteGroup::symmetric(number(10));
    return FiniteGroup::parse(read_file(spec));
}

std::set<GeneratorId> parse_generators(const SimplicialSet& k, const std::string& spec, const char* flag) {
    if (spec.rfind("skeleton:", 0) == 0) {
        const int n = std::stoi(spec.substr(9));
        std::set<GeneratorId> out;
        for (const auto& g : all_generators(k))
            if (g.dim <= n) out.insert(g);
        return out;
    }
    if (spec == "all") return all_generators(k);
    std::set<GeneratorId> out;
    if (spec.empty() || spec == "none") return out;
    std::istringstream in(spec);
    for (std::string item; std::getline(in, item, ',');) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument(std::string(flag) + ": expected d:id entries, got '" + item + "'");
        GeneratorId g{std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))};
        if (!k.has_generator(g.dim, g.id))
            throw std::invalid_argument(std::string(flag) + ": unknown generator " + item);
        out.insert(g);
    }
    return face_closure(k, out);
}

int degree_bound(const Options& o, const SimplicialSet& k) { return o.dim >= 0 ? o.dim : std::max(k.top_dim(), 0); }

void homology_command(const Options& o, RunReport& r) {
    auto in = load(o);
    auto h = homology(normalized_chains(*in.set), degree_bound(o, *in.set));
    for (std::size_t n = 0; n < h.size(); ++n) r.results.emplace_back("H_" + std::to_string(n), h[n].to_string());
}

void cohomology_command(const Options& o, RunReport& r) {
    auto in = load(o);
    auto h = cohomology_with_coefficients(normalized_chains(*in.set), AbelianGroup::parse(o.coeff), degree_bound(o, *in.set));
    for (std::size_t n = 0; n < h.size(); ++n) r.results.emplace_back("H^" + std::to_string(n), h[n].to_string());
}

void coeffs_command(const Options& o, RunReport& r) {
    auto in = load(o);
    auto c = normalized_chains(*in.set);
    auto pi = AbelianGroup::parse(o.coeff);
    const int up_to = degree_bound(o, *in.set);
    auto h = homology_with_coefficients(c, pi, up_to);
    auto cc = cohomology_with_coefficients(c, pi, up_to);
    for (std::size_t n = 0; n < h.size(); ++n) r.results.emplace_back("H_" + std::to_string(n), h[n].to_string());
    for (std::size_t n = 0; n < cc.size(); ++n) r.results.emplace_back("H^" + std::to_string(n), cc[n].to_string());
}

void uct_command(const Options& o, RunReport& r) {
    auto in = load(o);
    auto report = uct_check(normalized_chains(*in.set), AbelianGroup::parse(o.coeff), degree_bound(o, *in.set));
    add_lines(r, report.to_text());
    for (const auto& row : report.rows) r.properties.emplace_back("uct.degree" + std::to_string(row.degree), row.ok());
}

void sequence_report(const ExactSequenceReport& s, RunReport& r) {
    for (std::size_t i = 0; i < s.nodes.size(); ++i) r.results.emplace_back(s.nodes[i].label, s.nodes[i].group.to_string());
    add_lines(r, s.to_text());
    r.properties.emplace_back("exact", s.all_exact());
}

void les_command(const Options& o, RunReport& r) {
    auto in = load(o);
    auto sub = o.sub.empty() ? parse_generators(*in.set, "skeleton:" + std::to_string(in.set->top_dim() - 1), "--sub")
                             : parse_generators(*in.set, o.sub, "--sub");
    sequence_report(pair_les(*in.set, sub, degree_bound(o, *in.set)), r);
}

void mv_command(const Options& o, RunReport& r) {
    auto in = load(o);
    if (o.sub_a.empty() || o.sub_b.empty()) throw std::invalid_argument("mv needs --sub-a and --sub-b");
    sequence_report(mayer_vietoris(*in.set, parse_generators(*in.set, o.sub_a, "--sub-a"),
                                   parse_generators(*in.set, o.sub_b, "--sub-b"), degree_bound(o, *in.set)),
                    r);
}

void cup_command(const Options& o, RunReport& r) {
    auto in = load(o);
    auto table = cohomology_ring_table(*in.set, ring_modulus(o.coeff), o.dim);
    r.results.emplace_back("groups", join_groups(table.groups));
    add_lines(r, table.to_text());
    r.properties.emplace_back("graded_commutative", table.graded_commutative);
    r.properties.emplace_back("associative", table.associative);
}

void kunneth_command(const Options& o, RunReport& r) {
    auto in = load(o);
    if (o.with.empty()) throw std::invalid_argument("kunneth needs --with <space>");
    auto report = kunneth_check(in.set, catalog(o.with), o.dim);
    for (const auto& row : report.rows) r.results.emplace_back("H_" + std::to_string(row.degree), row.direct.to_string());
    add_lines(r, report.to_text());
    r.properties.emplace_back("kunneth", report.ok());
}

void euler_command(const Options& o, RunReport& r) {
    auto in = load(o);
    r.results.emplace_back("chi", std::to_string(euler_characteristic(*in.set)));
}

void kan_command(const Options& o, RunReport& r) {
    auto in = load(o);
    auto report = kan_check(*in.set, o.dim >= 0 ? o.dim : 3);
    r.results.emplace_back("horns", std::to_string(report.problems));
    r.results.emplace_back("unfillable", std::to_string(report.failure_count));
    add_lines(r, report.to_text());
    r.properties.emplace_back("kan", report.ok());
}

void fill_command(const Options& o, RunReport& r) {
    auto in = load(o);
    if (o.faces.empty() || o.k < 0) throw std::invalid_argument("fill needs --k and --faces");
    nlohmann::json faces;
    try {
        faces = nlohmann::json::parse(o.faces);
    } catch (const nlohmann::json::parse_error&) {
        throw std::invalid_argument("--faces: malformed JSON");
    }
    if (!faces.is_array() || faces.empty()) throw std::invalid_argument("--faces: expected a non-empty list of [base-id, word]");
    const int n = static_cast<int>(faces.size());
    if (o.k > n) throw std::invalid_argument("--k out of range");
    HornMap h{n, o.k, {}};
    std::size_t next = 0;
    for (int i = 0; i <= n; ++i) {
        if (i == o.k) {
            h.faces.emplace_back();
            continue;
        }
        const auto& f = faces[next++];
        if (!f.is_array() || f.size() != 2) throw std::invalid_argument("--faces: expected [base-id, word] entries");
        DegeneracyWord word = f[1].get<DegeneracyWord>();
        const int base_dim = n - 1 - static_cast<int>(word.size());
        if (base_dim < 0 || !is_canonical_word(word, n - 1)) throw std::invalid_argument("--faces: bad degeneracy word");
        const int base = f[0].get<int>();
        if (!in.set->has_generator(base_dim, base)) throw std::invalid_argument("--faces: unknown generator");
        h.faces.push_back(SimplexRef{base_dim, base, std::move(word)});
    }
    if (!h.is_compatible(*in.set)) throw std::invalid_argument("--faces: faces do not agree on their common faces");
    auto fillers = fill_horn(*in.set, h);
    r.details.push_back(h.to_string());
    r.results.emplace_back("fillers", std::to_string(fillers.size()));
    for (const auto& x : fillers) r.details.push_back(to_string(x));
}

void pi1_command(const Options& o, RunReport& r) {
    auto in = load(o);
    auto p = pi1_presentation(*in.set, o.base);
    auto ab = abelianization(p.presentation);
    auto simple = tietze_simplify(p.presentation);
    r.results.emplace_back("generators", std::to_string(p.presentation.generators.size()));
    r.results.emplace_back("relators", std::to_string(p.presentation.relators.size()));
    r.results.emplace_back("presentation", p.presentation.to_string());
    r.results.emplace_back("abelianization", ab.to_string());
    r.results.emplace_back("simplified", simple.presentation.to_string());
    r.results.emplace_back("tietze_steps", std::to_string(simple.steps));
    r.results.emplace_back("trivial", simple.proven_trivial() ? "proven" : "undecided");
    auto h = homology(normalized_chains(*in.set), 1);
    r.properties.emplace_back("abelianization_matches_H1", ab == (h.size() > 1 ? h[1] : AbelianGroup::trivial()));
}

std::vector<int> parse_images(const std::string& spec) {
    std::vector<int> out;
    std::istringstream in(spec);
    for (std::string item; std::getline(in, item, ',');) out.push_back(std::stoi(item));
    return out;
}

void cover_command(const Options& o, RunReport& r) {
    auto in = load(o);
    auto g = load_group(o.group);
    auto p = pi1_presentation(*in.set, o.base);
    std::vector<int> images;
    if (o.images.empty()) {
        auto found = find_homomorphism(p.presentation, g, true);
        if (!found) throw std::invalid_argument("no surjection from the fundamental group onto the group");
        images = *found;
    } else {
        images = parse_images(o.images);
    }
    auto cover = build_cover(labeling_from_hom(in.set, p, images, g));
    auto report = verify_covering(cover.projection, static_cast<std::size_t>(g.order()), o.dim >= 0 ? o.dim : 2);
    std::string image_text;
    for (std::size_t i = 0; i < images.size(); ++i)
        image_text += (i ? "," : "") + p.presentation.generators[i] + "=" + g.name(images[i]);
    r.results.emplace_back("images", image_text);
    r.results.emplace_back("counts", counts(*cover.set));
    r.results.emplace_back("chi", std::to_string(report.euler_cover));
    r.results.emplace_back("homology", join_groups(homology(normalized_chains(*cover.set))));
    add_lines(r, report.to_text());
    r.properties.emplace_back("fiber_cardinality", report.fibers_ok);
    r.properties.emplace_back("unique_lifting", report.lifting.ok());
    r.properties.emplace_back("euler_multiplicative", report.euler_ok());
}

void subdivide_command(const Options& o, RunReport& r) {
    auto in = load(o);
    auto l = as_ordered_complex(*in.set);
    if (!l) throw std::invalid_argument("subdivide needs a space whose simplices are determined by distinct increasing vertices");
    auto sd = barycentric_subdivide(*l);
    auto k = complex_to_sset(sd.complex);
    r.results.emplace_back("counts", counts(k));
    r.results.emplace_back("chi", std::to_string(euler_characteristic(k)));
    r.properties.emplace_back("chain_map", sd.chain_map);
    r.properties.emplace_back("quasi_isomorphism", sd.quasi_isomorphism);
    r.properties.emplace_back("euler_preserved", euler_characteristic(k) == euler_characteristic(*in.set));
}

void validate_command(const Options& o, RunReport& r) {
    try {
        auto in = load(o);
        auto report = in.set->validate();
        r.results.emplace_back("counts", counts(*in.set));
        if (!report) r.details.push_back(report.message);
        r.properties.emplace_back("valid", report.ok);
    } catch (const ParseError& e) {
        r.details.push_back(e.what());
        r.properties.emplace_back("valid", false);
    }
}

void catalog_command(const Options&, RunReport& r) {
    for (const auto& e : catalog_entries()) r.details.push_back(e.pattern + "  " + e.description);
}

struct Command {
    const char* name;
    const char* help;
    void (*body)(const Options&, RunReport&);
    std::vector<std::string> flags;
};

const std::vector<Command>& commands() {
    static const std::vector<Command> list = {
        {"homology", "integral homology", homology_command, {"dim"}},
        {"cohomology", "cohomology with coefficients", cohomology_command, {"dim", "coeff"}},
        {"coeffs", "homology and cohomology with coefficients", coeffs_command, {"dim", "coeff"}},
        {"uct", "universal coefficient check", uct_command, {"dim", "coeff"}},
        {"les", "long exact sequence of a pair", les_command, {"dim", "sub"}},
        {"mv", "Mayer-Vietoris sequence", mv_command, {"dim", "sub-a", "sub-b"}},
        {"cup", "cohomology ring table", cup_command, {"dim", "coeff"}},
        {"kunneth", "Kunneth check against a second space", kunneth_command, {"dim", "with"}},
        {"euler", "Euler characteristic", euler_command, {}},
        {"kan", "horn filling through a dimension", kan_command, {"dim"}},
        {"fill", "fillers of one horn", fill_command, {"k", "faces"}},
        {"pi1", "edge-path presentation of the fundamental group", pi1_command, {"base"}},
        {"cover", "finite cover from a group and verification", cover_command, {"dim", "base", "group", "images"}},
        {"subdivide", "barycentric subdivision", subdivide_command, {}},
        {"validate", "parse and validate a space", validate_command, {}},
        {"catalog-list", "list catalog spaces", catalog_command, {}},
    };
    return list;
}

void add_flags(CLI::App& sub, const Command& c, Options& o) {
    if (std::string(c.name) != "catalog-list") {
        sub.add_option("--space", o.space, "catalog space name");
        sub.add_option("--file", o.file, "space document");
    }
    sub.add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    sub.add_option("--seed", o.seed, "reserved; all operations are deterministic");
    sub.add_flag("--timing", o.timing, "report elapsed time");
    auto has = [&](const char* f) { return std::find(c.flags.begin(), c.flags.end(), f) != c.flags.end(); };
    if (has("dim")) sub.add_option("--dim", o.dim, "degree or dimension bound")->check(CLI::NonNegativeNumber);
    if (has("coeff")) sub.add_option("--coeff", o.coeff, "coefficients, e.g. Z, Z/2, Z^2+Z/4");
    if (has("sub")) sub.add_option("--sub", o.sub, "subcomplex: skeleton:N, all, none or d:id,...");
    if (has("sub-a")) sub.add_option("--sub-a", o.sub_a, "first subcomplex");
    if (has("sub-b")) sub.add_option("--sub-b", o.sub_b, "second subcomplex");
    if (has("with")) sub.add_option("--with", o.with, "second catalog space");
    if (has("k")) sub.add_option("--k", o.k, "missing face index")->check(CLI::NonNegativeNumber);
    if (has("faces")) sub.add_option("--faces", o.faces, "JSON list of [base-id, word] for the faces other than k");
    if (has("base")) sub.add_option("--base", o.base, "base vertex id")->check(CLI::NonNegativeNumber);
    if (has("group")) sub.add_option("--group", o.group, "Z/n, cyclic:n, symmetric:n or a group file");
    if (has("images")) sub.add_option("--images", o.images, "generator images as comma-separated element ids");
}

std::string quote_args(const std::vector<std::string>& args) {
    std::string out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const auto& a = args[i];
        const bool plain = !a.empty() && a.find_first_of(" \t\"'") == std::string::npos;
        out += (i ? " " : "") + (plain ? a : "'" + a + "'");
    }
    return out;
}

}  // namespace

bool RunReport::ok() const {
    if (!error.empty()) return false;
    for (const auto& [name, pass] : properties)
        if (!pass) return false;
    return true;
}

int RunReport::exit_code() const {
    if (!error.empty()) return 2;
    return ok() ? 0 : 1;
}

std::string RunReport::text() const {
    std::ostringstream out;
    out << "command: " << command << '\n';
    if (!error.empty()) {
        out << "error: " << error << '\n';
        return out.str();
    }
    const bool compact =
        std::none_of(results.begin(), results.end(), [](const auto& kv) { return kv.second.find(' ') != std::string::npos; });
    for (std::size_t i = 0; i < results.size(); ++i)
        out << results[i].first << '=' << results[i].second << (compact && i + 1 < results.size() ? ' ' : '\n');
    for (const auto& d : details) out << d << '\n';
    for (const auto& [name, pass] : properties) out << (pass ? "PASS " : "FAIL ") << name << '\n';
    if (!properties.empty()) out << "status: " << (ok() ? "PASS" : "FAIL") << '\n';
    if (show_timing) out << "seconds: " << seconds << '\n';
    return out.str();
}

std::string RunReport::machine_text() const {
    std::ostringstream out;
    out << "command=" << command << '\n';
    if (!error.empty()) {
        out << "error=" << error << "\nstatus=ERROR\n";
        return out.str();
    }
    for (const auto& [k, v] : results) out << k << '=' << v << '\n';
    for (const auto& d : details) out << "detail=" << d << '\n';
    for (const auto& [name, pass] : properties) out << "property." << name << '=' << (pass ? "PASS" : "FAIL") << '\n';
    out << "status=" << (properties.empty() ? "OK" : ok() ? "PASS" : "FAIL") << '\n';
    if (show_timing) out << "seconds=" << seconds << '\n';
    return out.str();
}

RunReport run(const std::vector<std::string>& args) {
    RunReport report;
    report.command = quote_args(args);
    Options o;
    CLI::App app{"simplicial set invariants"};
    app.require_subcommand(1);
    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const auto& c : commands()) {
        auto* sub = app.add_subcommand(c.name, c.help);
        add_flags(*sub, c, o);
        subs.emplace_back(sub, &c);
    }
    const auto start = std::chrono::steady_clock::now();
    try {
        if (args.empty()) throw std::invalid_argument("missing command; try catalog-list or --help");
        const bool known = std::any_of(commands().begin(), commands().end(), [&](const Command& c) { return args[0] == c.name; });
        if (!known && args[0].rfind("-", 0) != 0) throw std::invalid_argument("unknown command '" + args[0] + "'");
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        report.machine = o.format == "machine";
        report.show_timing = o.timing;
        for (auto [sub, c] : subs)
            if (sub->parsed()) c->body(o, report);
    } catch (const CLI::CallForHelp&) {
        std::string help;
        for (auto [sub, c] : subs)
            if (sub->parsed()) help = sub->help();
        add_lines(report, help.empty() ? app.help() : help);
    } catch (const CLI::ParseError& e) {
        report.error = e.what();
    } catch (const std::exception& e) {
        report.error = e.what();
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace simplicial
