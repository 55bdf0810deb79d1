// Command-line front end: decide equivariant unirationality of a surface
// action, inspect fixed loci and classifications, reproduce the C2^2/C3^2
// tables, emit built-in families as input documents, and work with the
// line configuration of the Fermat cubic.
//
// Exit codes: 0 = success (decide: unirational), 10 = decide: not
// unirational, 2 = invalid input or arguments.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "guni/guni.hpp"

namespace {

using guni::io::json;

struct GlobalOptions {
    std::string format = "text";
    int threads = 1;
    long cap = guni::ProjGroup::kDefaultCap;
    unsigned seed = 0; // reserved for randomized property tooling
};

struct SelectionOptions {
    std::string input_path;
    std::string family;
    std::string alpha;
    std::string quartic_params;
    std::string abc;
    std::string group;
    std::string gens;
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

guni::families::Parameters parse_family_params(const SelectionOptions& sel) {
    guni::families::Parameters params;
    if (!sel.alpha.empty()) params.alpha = guni::Rational::parse(sel.alpha);
    if (!sel.quartic_params.empty()) {
        std::vector<guni::Rational> a;
        for (const auto& part : split_csv(sel.quartic_params)) a.push_back(guni::Rational::parse(part));
        params.a = std::move(a);
    }
    if (!sel.abc.empty()) {
        auto parts = split_csv(sel.abc);
        if (parts.size() != 3)
            guni::raise(guni::ErrorCode::BadParameters, "--abc expects three values");
        params.abc = {guni::Rational::parse(parts[0]), guni::Rational::parse(parts[1]),
                      guni::Rational::parse(parts[2])};
    }
    return params;
}

// The surface and generator list a subcommand operates on.
struct Selected {
    guni::SurfaceModel surface;
    std::vector<std::pair<std::string, guni::ProjElement>> generators; // named, document order
    std::vector<guni::ProjElement> chosen;                             // what the command acts on
    std::string description;
};

Selected select(const SelectionOptions& sel) {
    if (sel.input_path.empty() == sel.family.empty())
        guni::raise(guni::ErrorCode::BadParameters, "choose exactly one of --input or --family");

    std::optional<guni::io::SurfaceInput> input;
    std::optional<guni::FamilySpec> fam;
    if (!sel.input_path.empty()) {
        std::ifstream in(sel.input_path);
        if (!in) guni::raise(guni::ErrorCode::ParseError, "cannot open " + sel.input_path);
        json doc;
        try {
            in >> doc;
        } catch (const json::exception& e) {
            guni::raise(guni::ErrorCode::ParseError, e.what());
        }
        input = guni::io::surface_input_from_json(doc);
    } else {
        fam = guni::families::family(sel.family, parse_family_params(sel));
    }

    Selected out{input ? input->model : fam->surface(), {}, {}, ""};
    if (input) {
        out.generators = input->generators;
        out.description = sel.input_path;
    } else {
        for (const auto& name : fam->generator_names())
            out.generators.emplace_back(name, fam->generator(name));
        out.description = sel.family;
    }

    auto named = [&](const std::vector<std::string>& names) {
        std::vector<guni::ProjElement> gens;
        for (const auto& want : names) {
            bool found = false;
            for (const auto& [name, g] : out.generators)
                if (name == want) {
                    gens.push_back(g);
                    found = true;
                    break;
                }
            if (!found) guni::raise(guni::ErrorCode::BadParameters, "unknown generator " + want);
        }
        return gens;
    };

    if (!sel.group.empty()) {
        if (input) {
            out.chosen = input->preset_generators(sel.group);
        } else {
            out.chosen = fam->preset_generators(sel.group);
        }
        out.description += "/" + sel.group;
    } else if (!sel.gens.empty()) {
        out.chosen = named(split_csv(sel.gens));
        out.description += "/{" + sel.gens + "}";
    } else {
        for (const auto& [name, g] : out.generators) out.chosen.push_back(g);
        out.description += "/(all generators)";
    }
    return out;
}

void add_selection_flags(CLI::App* cmd, SelectionOptions& sel) {
    cmd->add_option("--input", sel.input_path, "surface input JSON file");
    cmd->add_option("--family", sel.family, "built-in family name");
    cmd->add_option("--alpha", sel.alpha, "cyclic_cubic parameter");
    cmd->add_option("--a", sel.quartic_params, "diagonal_quartic parameters a1,..,a5");
    cmd->add_option("--abc", sel.abc, "a4_cubic parameters a,b,c");
    cmd->add_option("--group", sel.group, "preset group name");
    cmd->add_option("--gens", sel.gens, "comma-separated generator names");
}

void emit(const GlobalOptions& global, const json& as_json, const std::string& as_text) {
    if (global.format == "json")
        std::cout << as_json.dump(2) << "\n";
    else
        std::cout << as_text;
}

std::string index_set_str(const guni::IndexSet& s) {
    std::string out = "[";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

int cmd_decide(const GlobalOptions& global, const SelectionOptions& sel) {
    Selected selected = select(sel);
    guni::DecisionReport report =
        guni::decide(selected.surface, selected.chosen, global.cap, global.threads);
    std::ostringstream text;
    text << "action: " << selected.description << "\n";
    text << "group order: " << report.group_order << "\n";
    text << "unirational: " << (report.unirational ? "true" : "false") << "\n";
    if (!report.witnesses.empty()) {
        text << "witnesses (minimal fixed-point-free abelian subgroups):\n";
        for (const auto& w : report.witnesses) {
            text << "  obstruction " << guni::obstruction_name(w.label) << "  " << w.tag.str();
            if (w.label != guni::Obstruction::Unlabeled)
                text << "  [" << guni::obstruction_cremona_label(w.label) << "]";
            text << "  elements " << index_set_str(w.elements) << "\n";
        }
    }
    text << "checked maximal abelian subgroups (up to conjugacy):\n";
    for (const auto& c : report.checked)
        text << "  " << c.tag.str() << "  fixed point: " << (c.has_fixed_point ? "yes" : "no")
             << "  elements " << index_set_str(c.elements) << "\n";
    emit(global, guni::io::to_json(report), text.str());
    return report.unirational ? 0 : 10;
}

int cmd_fixed(const GlobalOptions& global, const SelectionOptions& sel) {
    Selected selected = select(sel);
    guni::ProjGroup g =
        guni::ProjGroup::generate(selected.surface.vec_dim(), selected.chosen, global.cap);
    guni::FixedPointReport report = guni::fixed_points_on_surface(g, selected.surface, global.cap);
    std::ostringstream text;
    text << "action: " << selected.description << "\n";
    text << "group order: " << g.order() << "\n";
    if (report.components.empty()) {
        text << "fixed locus: empty\n";
    } else {
        text << "fixed locus components:\n";
        for (const auto& [space, meet] : report.components) {
            text << "  projective dim " << space.proj_dim() << ", meets surface: "
                 << (meet.nonempty ? "yes" : "no") << " (count " << meet.count_str() << ")\n";
            for (int i = 0; i < space.dim(); ++i) {
                text << "    [";
                for (int j = 0; j < space.ambient(); ++j) {
                    if (j) text << " ";
                    text << space.basis().at(i, j).str();
                }
                text << "]\n";
            }
        }
    }
    text << "has fixed point on surface: " << (report.has_fixed_point ? "yes" : "no") << "\n";
    emit(global, guni::io::to_json(report), text.str());
    return 0;
}

int cmd_classify(const GlobalOptions& global, const SelectionOptions& sel) {
    Selected selected = select(sel);
    guni::ProjGroup g =
        guni::ProjGroup::generate(selected.surface.vec_dim(), selected.chosen, global.cap);
    json j;
    std::ostringstream text;
    j["action"] = selected.description;
    j["group_order"] = g.order();
    guni::GroupTag tag = g.tag_of(g.full_set());
    j["tag"] = tag.str();
    text << "action: " << selected.description << "\n";
    text << "group order: " << g.order() << ", tag " << tag.str() << "\n";
    if (tag == guni::GroupTag::elementary_abelian(2, 2) && g.n() == 5) {
        auto cls = guni::c22_type(g);
        j["c22_type"] = guni::subgroup_type_name(cls.type);
        j["kind_counts"] = {cls.first_kind, cls.second_kind};
        text << "C2^2 type " << guni::subgroup_type_name(cls.type) << " (first kind "
             << cls.first_kind << ", second kind " << cls.second_kind << ")\n";
    }
    if (tag == guni::GroupTag::elementary_abelian(3, 2) && g.n() == 4) {
        auto cls = guni::c32_type(g);
        j["c32_type"] = guni::subgroup_type_name(cls.type);
        j["carter_counts"] = {cls.three_a2, cls.two_a2, cls.a2};
        text << "C3^2 type " << guni::subgroup_type_name(cls.type) << " (3A2 " << cls.three_a2
             << ", 2A2 " << cls.two_a2 << ", A2 " << cls.a2 << ")\n";
    }
    json elements = json::array();
    text << "elements:\n";
    for (long i = 0; i < g.order(); ++i) {
        const auto& e = g.element((int)i);
        json ej;
        ej["index"] = i;
        long order = g.element_order((int)i);
        ej["order"] = order;
        std::string note;
        if (g.n() == 4 && order == 3)
            note = guni::carter_class_name(guni::carter_class(e));
        if (g.n() == 5 && order == 2) {
            try {
                note = guni::involution_kind(e) == guni::InvolutionKind::FirstKind
                           ? "first kind" : "second kind";
            } catch (const guni::Error&) {
                note = "not a sign-change involution";
            }
        }
        if (!note.empty()) ej["class"] = note;
        elements.push_back(std::move(ej));
        text << "  #" << i << " order " << order;
        if (!note.empty()) text << " (" << note << ")";
        text << "\n";
    }
    j["elements"] = std::move(elements);
    emit(global, j, text.str());
    return 0;
}

int cmd_tables(const GlobalOptions& global, const std::string& which) {
    guni::TableReport report = guni::reproduce_table(which);
    std::ostringstream text;
    text << "table " << report.which << " (parent group order " << report.parent_order << ")\n";
    for (const auto& row : report.rows) {
        text << "  type " << guni::subgroup_type_name(row.type) << "  counts (";
        for (size_t i = 0; i < row.counts.size(); ++i) {
            if (i) text << ",";
            text << row.counts[i];
        }
        text << ")  [" << row.cremona << "]  fixed points: " << (row.has_fixed_points ? "yes" : "no")
             << "  crosscheck: " << (row.crosscheck_ok ? "ok" : "FAIL") << "  elements "
             << index_set_str(row.subgroup) << "\n";
    }
    text << "totals:";
    for (const auto& [type, count] : report.totals)
        text << " " << guni::subgroup_type_name(type) << ":" << count;
    text << "\ncrosschecks: " << (report.all_crosschecks_pass ? "all pass" : "FAILURES") << "\n";
    emit(global, guni::io::to_json(report), text.str());
    return report.all_crosschecks_pass ? 0 : 1;
}

int cmd_family(const GlobalOptions& global, const SelectionOptions& sel) {
    if (sel.family.empty())
        guni::raise(guni::ErrorCode::BadParameters, "family command needs a family name");
    guni::FamilySpec fam = guni::families::family(sel.family, parse_family_params(sel));
    std::cout << guni::io::to_json(fam).dump(2) << "\n";
    (void)global;
    return 0;
}

int cmd_lines(const GlobalOptions& global, const SelectionOptions& sel) {
    guni::LineSet ls = guni::fermat_lines();
    guni::FamilySpec fam = guni::families::fermat();
    json j;
    std::ostringstream text;
    j["lines"] = ls.size();
    text << "fermat cubic: " << ls.size() << " lines\n";
    json lines = json::array();
    for (const auto& l : ls.lines()) lines.push_back(guni::io::to_json(l));
    j["basis_matrices"] = std::move(lines);
    if (!sel.group.empty()) {
        guni::ProjGroup g = fam.preset_group(sel.group, global.cap);
        int rank = guni::invariant_picard_rank(g, ls);
        j["group"] = sel.group;
        j["invariant_picard_rank"] = rank;
        text << "group " << sel.group << " (order " << g.order()
             << "): invariant Picard rank " << rank << "\n";
    } else {
        guni::ProjGroup trivial = guni::ProjGroup::generate(4, {});
        j["invariant_picard_rank"] = guni::invariant_picard_rank(trivial, ls);
        text << "invariant Picard rank of the trivial group: "
             << guni::invariant_picard_rank(trivial, ls) << "\n";
    }
    emit(global, j, text.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant-unirationality engine for del Pezzo surface models"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--format", global.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", global.threads, "worker threads for subgroup checks");
    app.add_option("--cap", global.cap, "group closure cap");
    app.add_option("--seed", global.seed, "seed for randomized property tooling");

    SelectionOptions sel_decide, sel_fixed, sel_classify, sel_family, sel_lines;
    std::string table_name;

    CLI::App* decide_cmd = app.add_subcommand("decide", "decide equivariant unirationality");
    add_selection_flags(decide_cmd, sel_decide);
    CLI::App* fixed_cmd = app.add_subcommand("fixed", "fixed locus of an abelian action");
    add_selection_flags(fixed_cmd, sel_fixed);
    CLI::App* classify_cmd = app.add_subcommand("classify", "classify elements and the subgroup");
    add_selection_flags(classify_cmd, sel_classify);
    CLI::App* tables_cmd = app.add_subcommand("tables", "reproduce a classification table");
    tables_cmd->add_option("which", table_name, "dp4-c22 or dp3-c32")->required();
    CLI::App* family_cmd = app.add_subcommand("family", "emit a built-in family as JSON");
    family_cmd->add_option("name", sel_family.family, "family name")->required();
    family_cmd->add_option("--alpha", sel_family.alpha, "cyclic_cubic parameter");
    family_cmd->add_option("--a", sel_family.quartic_params, "diagonal_quartic parameters");
    family_cmd->add_option("--abc", sel_family.abc, "a4_cubic parameters");
    CLI::App* lines_cmd = app.add_subcommand("lines", "line configuration of the Fermat cubic");
    lines_cmd->add_option("--group", sel_lines.group, "preset group for the invariant rank");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (decide_cmd->parsed()) return cmd_decide(global, sel_decide);
        if (fixed_cmd->parsed()) return cmd_fixed(global, sel_fixed);
        if (classify_cmd->parsed()) return cmd_classify(global, sel_classify);
        if (tables_cmd->parsed()) return cmd_tables(global, table_name);
        if (family_cmd->parsed()) return cmd_family(global, sel_family);
        if (lines_cmd->parsed()) return cmd_lines(global, sel_lines);
    } catch (const guni::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
