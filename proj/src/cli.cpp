#include "ptrans/cli.hpp"

#include "ptrans/characters.hpp"
#include "ptrans/designs.hpp"
#include "ptrans/errors.hpp"
#include "ptrans/groups.hpp"
#include "ptrans/scheme.hpp"
#include "ptrans/transitivity.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace ptrans::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Both methods disagreed on a valid input.
class DisagreementError : public InternalError {
public:
    using InternalError::InternalError;
};

Json parts_json(const Partition& p)
{
    return Json(p.parts());
}

Json witness_json(const Witness& w)
{
    struct Visitor {
        Json operator()(std::monostate) const { return nullptr; }
        Json operator()(const TabloidWitness& t) const
        {
            return Json{{"kind", "tabloid_pair"}, {"from", t.from.to_string()}, {"to", t.to.to_string()}, {"count", t.count}};
        }
        Json operator()(const SpectralWitness& s) const
        {
            return Json{{"kind", "dual_coefficient"}, {"mu", parts_json(s.mu)}, {"b", to_string(s.b)}};
        }
        Json operator()(const OrbitWitness& o) const
        {
            return Json{{"kind", "orbit"}, {"start", o.start.to_string()}, {"orbit_size", o.orbit_size}};
        }
    };
    return std::visit(Visitor{}, w);
}

Json verdict_json(const TransitivityVerdict& v)
{
    return Json{{"lambda", parts_json(v.lambda)},
                {"transitive", v.transitive},
                {"r", to_string(v.r)},
                {"method", to_string(v.method)},
                {"witness", witness_json(v.witness)}};
}

std::string verdict_text(const TransitivityVerdict& v)
{
    if (v.transitive)
        return "transitive, r=" + to_string(v.r) + " (" + to_string(v.method) + ")";
    return std::string("not transitive (") + to_string(v.method) + "): " + describe(v.witness);
}

Budgets budgets_of(const RunConfig& c)
{
    Budgets b;
    b.max_table_n = c.max_n;
    b.oracle_work = c.oracle_budget;
    return b;
}

const Partition& require_lambda(const RunConfig& c)
{
    if (!c.lambda)
        throw InputError("--lambda is required");
    return *c.lambda;
}

void require_matching_weight(const Partition& la, int degree)
{
    if (la.weight() != degree)
        throw InputError("partition " + la.to_string() + " has weight " + std::to_string(la.weight()) +
                         " but the permutations have degree " + std::to_string(degree));
}

Method parse_method(const std::string& name)
{
    if (name == "oracle")
        return Method::oracle;
    if (name == "character")
        return Method::character;
    if (name == "orbit")
        return Method::orbit;
    throw InputError("unknown method '" + name + "'");
}

PermSet load_perms(const RunConfig& c)
{
    if (c.perms_path.empty())
        throw InputError("--perms is required");
    PermSet d = read_perm_set_file(c.perms_path);
    if (c.assume_group)
        d.assume_group();
    return d;
}

PermSet component_set(const std::string& spec, int expected_degree)
{
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw InputError("component spec '" + spec + "' must be sym:K, alt:K or file:PATH");
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    PermSet set;
    if (kind == "file") {
        set = read_perm_set_file(arg);
    } else if (kind == "sym" || kind == "alt") {
        int k = 0;
        try {
            k = std::stoi(arg);
        } catch (const std::exception&) {
            throw InputError("component spec '" + spec + "' has a malformed degree");
        }
        set = classical_group(parse_group_kind(kind), k);
    } else {
        throw InputError("component spec '" + spec + "' must be sym:K, alt:K or file:PATH");
    }
    if (set.degree() != expected_degree)
        throw InputError("component '" + spec + "' has degree " + std::to_string(set.degree()) + ", expected " +
                         std::to_string(expected_degree));
    return set;
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(token, &used));
            if (used != token.size())
                throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw InputError("malformed integer list '" + text + "'");
        }
    }
    return out;
}

int cmd_check(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    const PermSet d = load_perms(c);
    const Partition& la = require_lambda(c);
    require_matching_weight(la, d.degree());
    if (d.empty())
        throw InputError("the permutation set is empty");
    const Budgets budgets = budgets_of(c);

    if (c.method != "both") {
        const Method m = parse_method(c.method);
        TransitivityVerdict v = m == Method::oracle      ? check_oracle(d, la, budgets)
                                : m == Method::character ? check_character(d, la, budgets)
                                                         : check_group_orbit(d, la, budgets);
        if (c.json)
            out << verdict_json(v).dump() << "\n";
        else
            out << verdict_text(v) << "\n";
        return 0;
    }

    const TransitivityVerdict oracle = check_oracle(d, la, budgets);
    const TransitivityVerdict character = check_character(d, la, budgets);
    if (oracle.transitive != character.transitive || oracle.r != character.r) {
        err << "BUG: methods disagree on " << la.to_string() << "\n"
            << "oracle: " << verdict_text(oracle) << "\n"
            << "character: " << verdict_text(character) << "\n"
            << "set:\n"
            << write_perm_set(d);
        throw DisagreementError("oracle and character methods disagree");
    }
    if (c.json) {
        out << Json{{"lambda", parts_json(la)},
                    {"transitive", oracle.transitive},
                    {"r", to_string(oracle.r)},
                    {"method", "both"},
                    {"verdicts", Json::array({verdict_json(oracle), verdict_json(character)})}}
                   .dump()
            << "\n";
    } else if (oracle.transitive) {
        out << "transitive, r=" << to_string(oracle.r) << ", methods agree\n";
    } else {
        out << "not transitive, methods agree; oracle: " << describe(oracle.witness)
            << "; character: " << describe(character.witness) << "\n";
    }
    return 0;
}

int cmd_profile(const RunConfig& c, std::ostream& out)
{
    const PermSet d = load_perms(c);
    const Method method = parse_method(c.method == "both" ? "character" : c.method);
    const Profile p = profile(d, method, budgets_of(c));
    if (c.json) {
        Json minimal = Json::array();
        for (const auto& la : p.minimal)
            minimal.push_back(parts_json(la));
        Json verdicts = Json::array();
        for (const auto& v : p.verdicts)
            verdicts.push_back(verdict_json(v));
        out << Json{{"n", d.degree()}, {"size", d.size()}, {"method", to_string(method)}, {"minimal", minimal},
                    {"verdicts", verdicts}}
                   .dump()
            << "\n";
        return 0;
    }
    out << "minimal:";
    for (const auto& la : p.minimal)
        out << " (" << la.to_string() << ")";
    out << "\n";
    for (const auto& v : p.verdicts)
        out << std::left << std::setw(2 * d.degree() + 2) << v.lambda.to_string()
            << (v.transitive ? "transitive r=" + to_string(v.r) : std::string("not transitive")) << "\n";
    return 0;
}

int cmd_dist(const RunConfig& c, std::ostream& out)
{
    const PermSet d = load_perms(c);
    const ClassDistribution classes = pair_class_distribution(d);
    const DistributionVector a = inner_distribution(d, classes);
    const DistributionVector b = dual_distribution(d, classes, character_table(d.degree(), c.max_n));
    if (c.json) {
        Json inner = Json::object();
        Json dual = Json::object();
        for (std::size_t i = 0; i < a.index.size(); ++i)
            inner[a.index[i].to_string()] = to_string(a.values[i]);
        for (std::size_t i = 0; i < b.index.size(); ++i)
            dual[b.index[i].to_string()] = to_string(b.values[i]);
        out << Json{{"n", d.degree()}, {"size", d.size()}, {"inner", inner}, {"dual", dual}}.dump() << "\n";
        return 0;
    }
    const int width = 2 * d.degree() + 2;
    out << "inner distribution a (by class)\n";
    for (std::size_t i = 0; i < a.index.size(); ++i)
        out << "  " << std::left << std::setw(width) << a.index[i].to_string() << to_string(a.values[i]) << "\n";
    out << "dual distribution b (by irreducible)\n";
    for (std::size_t i = 0; i < b.index.size(); ++i)
        out << "  " << std::left << std::setw(width) << b.index[i].to_string() << to_string(b.values[i]) << "\n";
    return 0;
}

int cmd_chartable(const RunConfig& c, std::ostream& out)
{
    if (!c.n)
        throw InputError("--n is required");
    const CharacterTable t = character_table(*c.n, c.max_n);
    if (c.json) {
        Json labels = Json::array();
        for (const auto& p : t.partitions)
            labels.push_back(p.to_string());
        out << Json{{"n", t.n}, {"partitions", labels}, {"values", t.values}}.dump() << "\n";
        return 0;
    }
    std::size_t label_width = 0;
    std::size_t cell = 1;
    for (const auto& p : t.partitions)
        label_width = std::max(label_width, p.to_string().size());
    for (const auto& row : t.values)
        for (auto v : row)
            cell = std::max(cell, std::to_string(v).size());
    for (const auto& p : t.partitions)
        cell = std::max(cell, p.to_string().size());
    out << std::string(label_width, ' ');
    for (const auto& p : t.partitions)
        out << ' ' << std::right << std::setw(static_cast<int>(cell)) << p.to_string();
    out << "\n";
    for (std::size_t mu = 0; mu < t.size(); ++mu) {
        out << std::left << std::setw(static_cast<int>(label_width)) << t.partitions[mu].to_string();
        for (auto v : t.values[mu])
            out << ' ' << std::right << std::setw(static_cast<int>(cell)) << v;
        out << "\n";
    }
    return 0;
}

int cmd_construct(const RunConfig& c, std::ostream& out)
{
    if (c.subcommand == "design") {
        if (c.design_path.empty())
            throw InputError("--design is required");
        const BlockDesign design = read_design_file(c.design_path);
        const PermSet d1 = component_set(c.d1_spec, design.k);
        const PermSet d2 = component_set(c.d2_spec, design.n - design.k);
        const BijectionAssignment bij =
            c.bij_path.empty() ? default_bijections(design) : read_bijections_file(c.bij_path, design);
        const PermSet d = product_construct(design, d1, d2, bij);
        out << write_perm_set(d, std::to_string(design.strength) + "-transitive product of " +
                                     std::to_string(design.blocks.size()) + " blocks, " + c.d1_spec + ", " + c.d2_spec);
        return 0;
    }
    if (c.subcommand == "agl-halved") {
        if (!c.q)
            throw InputError("--q is required");
        std::optional<std::vector<int>> s;
        if (c.half_set)
            s = parse_int_list(*c.half_set);
        const PermSet d = agl_halved(*c.q, s);
        out << write_perm_set(d, "halved AGL1(" + std::to_string(*c.q) + ")");
        return 0;
    }
    if (c.subcommand == "group") {
        const GroupKind kind = parse_group_kind(c.kind);
        std::optional<int> arg = is_field_kind(kind) ? c.q : c.n;
        if (!arg)
            throw InputError(is_field_kind(kind) ? "--q is required" : "--n is required");
        const PermSet g = classical_group(kind, *arg, c.closure_cap);
        out << write_perm_set(g, std::string(to_string(kind)) + "(" + std::to_string(*arg) + ")");
        return 0;
    }
    throw InputError("construct needs one of: design, agl-halved, group");
}

int cmd_closure(const RunConfig& c, std::ostream& out)
{
    if (c.gens_path.empty())
        throw InputError("--gens is required");
    const PermSet gens = read_perm_set_file(c.gens_path);
    if (gens.empty())
        throw InputError("no generators given");
    const PermSet g = closure(gens.elements(), c.closure_cap);
    out << write_perm_set(g, "closure of " + std::to_string(gens.size()) + " generators, order " +
                                 std::to_string(g.size()));
    return 0;
}

int cmd_orbits(const RunConfig& c, std::ostream& out)
{
    if (c.gens_path.empty())
        throw InputError("--gens is required");
    const PermSet gens = read_perm_set_file(c.gens_path);
    if (gens.empty())
        throw InputError("no generators given");
    const Partition& la = require_lambda(c);
    require_matching_weight(la, gens.degree());
    const PermSet g = closure(gens.elements(), c.closure_cap);
    const Integer orbits = orbit_count(g, la, budgets_of(c));
    if (c.json)
        out << Json{{"lambda", parts_json(la)}, {"order", g.size()}, {"orbits", orbits.get_str()}}.dump() << "\n";
    else
        out << "group of order " << g.size() << " has " << orbits.get_str() << " orbit(s) on tabloids of shape "
            << la.to_string() << "\n";
    return 0;
}

int cmd_divisibility(const RunConfig& c, std::ostream& out)
{
    if (!c.n || !c.size)
        throw InputError("--n and --size are required");
    const Partition& la = require_lambda(c);
    require_matching_weight(la, *c.n);
    Integer size;
    if (size.set_str(*c.size, 10) != 0 || size <= 0)
        throw InputError("--size must be a positive integer");
    const DivisibilityResult r = divisibility_check(size, la);
    if (c.json) {
        Json failing = Json::array();
        for (const auto& [mu, m] : r.failing)
            failing.push_back(Json{{"mu", parts_json(mu)}, {"multinomial", m.get_str()}});
        out << Json{{"lambda", parts_json(la)}, {"size", size.get_str()}, {"possible", r.possible}, {"failing", failing}}
                   .dump()
            << "\n";
        return 0;
    }
    if (r.possible) {
        out << "possible: every multinomial of a partition dominating " << la.to_string() << " divides "
            << size.get_str() << "\n";
        return 0;
    }
    out << "impossible:";
    for (std::size_t i = 0; i < r.failing.size(); ++i)
        out << (i ? ";" : "") << " " << r.failing[i].second.get_str() << " does not divide " << size.get_str() << " ("
            << r.failing[i].first.to_string() << ")";
    out << "\n";
    return 0;
}

Json coefficient_map(const std::vector<Partition>& index, const auto& values)
{
    Json m = Json::object();
    for (std::size_t i = 0; i < index.size(); ++i)
        if (values[i] != 0)
            m[index[i].to_string()] = to_string(values[i]);
    return m;
}

std::string coefficient_text(const std::vector<Partition>& index, const auto& values)
{
    std::string s;
    for (std::size_t i = 0; i < index.size(); ++i)
        if (values[i] != 0)
            s += (s.empty() ? "" : ", ") + index[i].to_string() + ": " + to_string(values[i]);
    return "{" + s + "}";
}

int cmd_scheme(const RunConfig& c, std::ostream& out)
{
    if (!c.n)
        throw InputError("--n is required");
    const int n = *c.n;
    if (n > c.max_n)
        throw BudgetError("n = " + std::to_string(n) + " exceeds --max-n " + std::to_string(c.max_n));
    const std::vector<Partition> index = partitions_of(n);

    if (c.scheme_mode == "split-basis") {
        Json rows = Json::array();
        for (const auto& la : index) {
            const auto m = coeffs_m(n, la);
            const auto coeff_n = coeffs_n(n, la);
            if (c.json)
                rows.push_back(Json{{"lambda", la.to_string()},
                                    {"m", coefficient_map(index, m)},
                                    {"n", coefficient_map(index, coeff_n)}});
            else
                out << "C[" << la.to_string() << "]\n  m (class basis):     " << coefficient_text(index, m)
                    << "\n  n (idempotent basis): " << coefficient_text(index, coeff_n) << "\n";
        }
        if (c.json)
            out << Json{{"n", n}, {"split_basis", rows}}.dump() << "\n";
        return 0;
    }

    const SymmetricGroupScheme scheme(n, c.matrix_cap);
    if (c.scheme_mode == "krein") {
        Json rows = Json::array();
        for (const auto& la : index)
            for (const auto& mu : index) {
                const auto q = scheme.krein(la, mu);
                if (c.json)
                    rows.push_back(Json{{"lambda", la.to_string()}, {"mu", mu.to_string()}, {"q", coefficient_map(index, q)}});
                else
                    out << "q[" << la.to_string() << " ; " << mu.to_string() << "] = " << coefficient_text(index, q)
                        << "\n";
            }
        if (c.json)
            out << Json{{"n", n}, {"krein", rows}}.dump() << "\n";
        return 0;
    }
    if (c.scheme_mode == "idempotents") {
        scheme.verify_idempotents();
        Json rows = Json::array();
        for (const auto& mu : index) {
            const SchemeMatrix& e = scheme.idempotent(mu);
            const auto values = *scheme.class_coordinates(e.entries);
            Json per_class = Json::object();
            for (std::size_t i = 0; i < index.size(); ++i)
                per_class[index[i].to_string()] = to_string(values[i]);
            if (c.json)
                rows.push_back(Json{{"mu", mu.to_string()}, {"trace", to_string(e.entries.trace())}, {"class_values", per_class}});
            else
                out << "E[" << mu.to_string() << "] trace " << to_string(e.entries.trace()) << ", class values "
                    << coefficient_text(index, values) << "\n";
        }
        if (c.json)
            out << Json{{"n", n}, {"verified", true}, {"idempotents", rows}}.dump() << "\n";
        else
            out << "verified: idempotent, pairwise orthogonal, summing to I\n";
        return 0;
    }
    throw InputError("unknown scheme mode '" + c.scheme_mode + "'");
}

} // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    try {
        switch (c.command) {
        case Command::check:
            return cmd_check(c, out, err);
        case Command::profile:
            return cmd_profile(c, out);
        case Command::dist:
            return cmd_dist(c, out);
        case Command::chartable:
            return cmd_chartable(c, out);
        case Command::construct:
            return cmd_construct(c, out);
        case Command::closure:
            return cmd_closure(c, out);
        case Command::orbits:
            return cmd_orbits(c, out);
        case Command::divisibility:
            return cmd_divisibility(c, out);
        case Command::scheme:
            return cmd_scheme(c, out);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::input_error);
    } catch (const BudgetError& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return static_cast<int>(ExitCode::budget_exhausted);
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::internal_error);
    }
    return static_cast<int>(ExitCode::internal_error);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig c;
    std::string lambda_text;
    bool split_basis = false;
    bool krein_mode = false;
    bool idempotents_mode = false;
    bool allow_6 = false;

    CLI::App app{"Decide lambda-transitivity of permutation sets and groups; build transitive sets; "
                 "compute the split basis and Krein parameters of the S_n scheme."};
    app.name(args.empty() ? "ptrans" : args.front());
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", c.json, "Emit JSON");
    app.add_option("--max-n", c.max_n, "Largest n for character tables");
    app.add_option("--closure-cap", c.closure_cap, "Largest group order to enumerate");
    app.add_option("--oracle-budget", c.oracle_budget, "Cap on tabloids^2 * |D| for the oracle method");

    auto* check = app.add_subcommand("check", "Decide lambda-transitivity of a permutation set");
    check->add_option("--lambda", lambda_text, "Partition, e.g. 5,1,1")->required();
    check->add_option("--perms", c.perms_path, "Permutation set file")->required();
    check->add_option("--method", c.method, "oracle | character | orbit | both")
        ->check(CLI::IsMember({"oracle", "character", "orbit", "both"}));
    check->add_flag("--assume-group", c.assume_group, "Treat the set as a group without verifying closure");

    auto* prof = app.add_subcommand("profile", "Dominance-minimal partitions for which the set is transitive");
    prof->add_option("--perms", c.perms_path, "Permutation set file")->required();
    prof->add_option("--method", c.method, "oracle | character | orbit")
        ->check(CLI::IsMember({"oracle", "character", "orbit"}));
    prof->add_flag("--assume-group", c.assume_group, "Treat the set as a group without verifying closure");

    auto* dist = app.add_subcommand("dist", "Inner and dual distributions");
    dist->add_option("--perms", c.perms_path, "Permutation set file")->required();

    auto* chart = app.add_subcommand("chartable", "Character table of S_n");
    chart->add_option("--n", c.n, "Degree")->required();

    auto* construct = app.add_subcommand("construct", "Build transitive sets and groups");
    construct->require_subcommand(1);
    auto* design = construct->add_subcommand("design", "Product construction from a block design");
    design->add_option("--design", c.design_path, "Design file")->required();
    design->add_option("--d1", c.d1_spec, "Set on k points: sym:K, alt:K or file:PATH")->required();
    design->add_option("--d2", c.d2_spec, "Set on n-k points: sym:K, alt:K or file:PATH")->required();
    design->add_option("--bij", c.bij_path, "Bijection assignment file");
    auto* halved = construct->add_subcommand("agl-halved", "Halved affine line over GF(q)");
    halved->add_option("--q", c.q, "Odd prime power")->required();
    halved->add_option("--set", c.half_set, "Half-set S as comma-separated element codes");
    auto* group = construct->add_subcommand("group", "Classical permutation group");
    group->add_option("--kind", c.kind, "sym | alt | cyclic | agl1 | agammal1 | psl2 | pgl2 | pgammal2")->required();
    group->add_option("--q", c.q, "Field order for field groups");
    group->add_option("--n", c.n, "Degree for sym, alt, cyclic");

    auto* clos = app.add_subcommand("closure", "Group generated by a permutation file");
    clos->add_option("--gens", c.gens_path, "Generator file")->required();

    auto* orbits = app.add_subcommand("orbits", "Orbits of a generated group on tabloids");
    orbits->add_option("--gens", c.gens_path, "Generator file")->required();
    orbits->add_option("--lambda", lambda_text, "Partition")->required();

    auto* divis = app.add_subcommand("divisibility", "Necessary size condition for lambda-transitive sets");
    divis->add_option("--n", c.n, "Degree")->required();
    divis->add_option("--size", c.size, "Set size")->required();
    divis->add_option("--lambda", lambda_text, "Partition")->required();

    auto* sch = app.add_subcommand("scheme", "Association scheme of S_n");
    sch->add_option("--n", c.n, "Degree")->required();
    auto* f_split = sch->add_flag("--split-basis", split_basis, "Split-basis coefficients (default)");
    auto* f_krein = sch->add_flag("--krein", krein_mode, "Krein parameters");
    auto* f_idem = sch->add_flag("--idempotents", idempotents_mode, "Primitive idempotents");
    f_split->excludes(f_krein)->excludes(f_idem);
    f_krein->excludes(f_idem);
    sch->add_flag("--allow-6", allow_6, "Raise the dense matrix cap from 5 to 6");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::input_error);
    }

    const std::pair<CLI::App*, Command> commands[] = {
        {check, Command::check},   {prof, Command::profile},   {dist, Command::dist},
        {chart, Command::chartable}, {construct, Command::construct}, {clos, Command::closure},
        {orbits, Command::orbits}, {divis, Command::divisibility}, {sch, Command::scheme},
    };
    for (auto [sub, cmd] : commands)
        if (sub->parsed())
            c.command = cmd;
    if (design->parsed())
        c.subcommand = "design";
    else if (halved->parsed())
        c.subcommand = "agl-halved";
    else if (group->parsed())
        c.subcommand = "group";
    if (krein_mode)
        c.scheme_mode = "krein";
    else if (idempotents_mode)
        c.scheme_mode = "idempotents";
    if (allow_6)
        c.matrix_cap = 6;

    if (!lambda_text.empty()) {
        try {
            c.lambda = Partition::parse(lambda_text);
        } catch (const InputError& e) {
            err << "error: " << e.what() << "\n";
            return static_cast<int>(ExitCode::input_error);
        }
    }
    return run(c, out, err);
}

} // namespace ptrans::cli
