#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chainlab/cover.hpp"
#include "chainlab/descent.hpp"
#include "chainlab/errors.hpp"
#include "chainlab/ring.hpp"
#include "chainlab/sentence.hpp"
#include "chainlab/structure.hpp"
#include "chainlab/suite.hpp"

using chainlab::json;

namespace {

struct options {
    bool as_json = false;
    std::size_t max_elements = chainlab::default_ring_cap;
    unsigned depth = 4;
};

json labels_of(const chainlab::ring_table& R, const std::set<chainlab::elem>& s) {
    json arr = json::array();
    for (chainlab::elem e : s) arr.push_back(R.label(e));
    return arr;
}

json tuple_json(const chainlab::ring_table& R, const chainlab::tuple_t& t) {
    json arr = json::array();
    for (chainlab::elem e : t) arr.push_back(R.label(e));
    return arr;
}

json family_json(const chainlab::family& U) {
    auto alg = [](const chainlab::fp_algebra& A) {
        json j;
        j["vars"] = A.vars;
        json rels = json::array();
        for (const auto& r : A.relations) rels.push_back(r.str());
        j["relations"] = rels;
        if (!A.is_absolute()) {
            json imgs = json::array();
            for (const auto& p : A.base_images) imgs.push_back(p.str());
            j["base_images"] = imgs;
        }
        return j;
    };
    json j;
    if (!U.name.empty()) j["name"] = U.name;
    j["base"] = alg(*U.base);
    json members = json::array();
    for (const auto& m : U.members) members.push_back(alg(m));
    j["members"] = members;
    return j;
}

json cover_json(const chainlab::family& U, const chainlab::ring_table& R,
                const chainlab::cover_report& rep) {
    json j;
    j["family"] = U.name;
    j["ring"] = R.spec();
    j["covers"] = rep.covers;
    if (rep.failing_point) j["failing_point"] = tuple_json(R, *rep.failing_point);
    if (rep.covers) {
        json lifts = json::array();
        for (std::size_t i = 0; i < rep.lifts.size(); ++i)
            lifts.push_back({{"base", tuple_json(R, rep.base_points[i])},
                             {"member", rep.lifts[i].first},
                             {"point", tuple_json(R, rep.lifts[i].second)}});
        j["lifts"] = lifts;
    }
    if (rep.warning) j["warning"] = *rep.warning;
    return j;
}

json proj_json(const chainlab::ring_table& R, const chainlab::proj_point& p) {
    return json::array({R.label(p.u), R.label(p.v)});
}

void emit(const options& opt, const std::string& command, const json& inputs,
          const json& result, const std::string& human) {
    if (opt.as_json) {
        json env;
        env["command"] = command;
        env["inputs"] = inputs;
        env["result"] = result;
        std::cout << env.dump(2) << "\n";
    } else {
        std::cout << human;
    }
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

int run(int argc, char** argv) {
    CLI::App app{"finite-ring covering and descent laboratory"};
    app.require_subcommand(1);
    app.fallthrough(); // let --json etc. appear after the subcommand
    options opt;
    app.add_flag("--json", opt.as_json, "machine-readable output");
    app.add_option("--max-elements", opt.max_elements, "ring size cap")
        ->capture_default_str();
    app.add_option("--depth", opt.depth, "Frobenius chain depth")
        ->capture_default_str();

    std::string ring_spec, text, builtin, name, second, a_expr, b_expr;

    auto* ring = app.add_subcommand("ring", "ring inspection");
    auto* ring_info = ring->add_subcommand("info", "sizes and predicates");
    ring_info->add_option("spec", ring_spec, "ring spec")->required();
    auto* ring_ideals = ring->add_subcommand("ideals", "enumerate all ideals");
    ring_ideals->add_option("spec", ring_spec, "ring spec")->required();

    auto* sentence = app.add_subcommand("sentence", "coherent sentences");
    auto* s_eval = sentence->add_subcommand("eval", "evaluate on a ring");
    s_eval->add_option("--text", text, "sentence text");
    s_eval->add_option("--builtin", builtin, "builtin name");
    s_eval->add_option("--ring", ring_spec, "ring spec")->required();
    auto* s_compile =
        sentence->add_subcommand("compile", "compile to a covering family");
    s_compile->add_option("--text", text, "sentence text");
    s_compile->add_option("--builtin", builtin, "builtin name");

    auto* fam = app.add_subcommand("family", "covering families");
    auto* f_check = fam->add_subcommand("check", "covering condition on a ring");
    f_check->add_option("--name", name, "named family")->required();
    f_check->add_option("--ring", ring_spec, "ring spec")->required();
    auto* f_compare =
        fam->add_subcommand("compare", "compare two families on the suite");
    f_compare->add_option("--first", name, "named family")->required();
    f_compare->add_option("--second", second, "named family")->required();

    auto* descent = app.add_subcommand("descent", "blowup square descent");
    auto* d_blowup = descent->add_subcommand("blowup", "point-level report");
    d_blowup->add_option("--ring", ring_spec, "ring spec")->required();

    auto* classify = app.add_subcommand("classify", "chain ring classification");
    classify->add_option("--ring", ring_spec, "ring spec")->required();

    auto* perf = app.add_subcommand("perfection", "Frobenius perfection");
    auto* p_colim = perf->add_subcommand("colim", "colimit perfection");
    p_colim->add_option("--ring", ring_spec, "ring spec")->required();

    auto* tilt = app.add_subcommand("tilt", "inverse-limit perfection checks");
    auto* t_check = tilt->add_subcommand("check", "domain-consequence checks");
    t_check->add_option("--ring", ring_spec, "ring spec")->required();
    auto* t_divide = tilt->add_subcommand("divide", "Frobenius chain division");
    t_divide->add_option("--ring", ring_spec, "ring spec")->required();
    t_divide->add_option("--a", a_expr, "deepest coordinate of the dividend")
        ->required();
    t_divide->add_option("--b", b_expr, "deepest coordinate of the divisor")
        ->required();

    auto* suite = app.add_subcommand("suite", "acceptance suite");
    auto* s_run = suite->add_subcommand("run", "run all criteria");

    CLI11_PARSE(app, argc, argv);

    auto build_ring = [&]() { return chainlab::build(ring_spec, opt.max_elements); };
    auto sentences = [&]() {
        if (!builtin.empty()) return chainlab::builtin_sentences(builtin);
        if (!text.empty())
            return std::vector<chainlab::coherent_sentence>{
                chainlab::parse_sentence(text)};
        throw chainlab::malformed_spec("pass --text or --builtin");
    };

    if (ring_info->parsed()) {
        chainlab::ring_table R = build_ring();
        auto p = chainlab::basic_predicates(R);
        json result;
        result["spec"] = R.spec();
        result["size"] = R.size();
        result["char"] = R.characteristic();
        result["predicates"] = {{"local", p.is_local},   {"domain", p.is_domain},
                                {"field", p.is_field},   {"reduced", p.is_reduced},
                                {"chain", p.is_chain}};
        result["nilradical"] = labels_of(R, chainlab::nilradical(R));
        std::string human = R.spec() + ": size " + std::to_string(R.size()) +
                            ", char " + std::to_string(R.characteristic()) +
                            "\n  local " + yesno(p.is_local) + ", domain " +
                            yesno(p.is_domain) + ", field " + yesno(p.is_field) +
                            ", reduced " + yesno(p.is_reduced) + ", chain " +
                            yesno(p.is_chain) + "\n";
        emit(opt, "ring info", {{"spec", ring_spec}}, result, human);
        return 0;
    }
    if (ring_ideals->parsed()) {
        chainlab::ring_table R = build_ring();
        auto ideals = chainlab::all_ideals(R);
        json result = json::array();
        std::string human = R.spec() + ": " + std::to_string(ideals.size()) +
                            " ideals\n";
        for (const auto& I : ideals) {
            result.push_back(labels_of(R, I));
            human += "  {";
            bool first = true;
            for (chainlab::elem e : I) {
                human += (first ? "" : ", ") + R.label(e);
                first = false;
            }
            human += "}\n";
        }
        emit(opt, "ring ideals", {{"spec", ring_spec}}, result, human);
        return 0;
    }
    if (s_eval->parsed()) {
        chainlab::ring_table R = build_ring();
        json result = json::array();
        std::string human;
        bool all = true;
        for (const auto& s : sentences()) {
            auto h = chainlab::holds(s, R);
            all = all && h.holds;
            json one;
            one["sentence"] = chainlab::render_sentence(s);
            one["holds"] = h.holds;
            if (h.counterexample)
                one["counterexample"] = tuple_json(R, *h.counterexample);
            result.push_back(one);
            human += chainlab::render_sentence(s) + "\n  holds: " +
                     yesno(h.holds) + "\n";
        }
        json inputs{{"ring", ring_spec}};
        if (!builtin.empty()) inputs["builtin"] = builtin;
        if (!text.empty()) inputs["sentence"] = text;
        emit(opt, "sentence eval",
             inputs, {{"all_hold", all}, {"sentences", result}}, human);
        return 0;
    }
    if (s_compile->parsed()) {
        json result = json::array();
        std::string human;
        for (const auto& s : sentences()) {
            chainlab::family U = chainlab::sentence_to_family(s);
            result.push_back(family_json(U));
            human += family_json(U).dump(2) + "\n";
        }
        json inputs;
        if (!builtin.empty()) inputs["builtin"] = builtin;
        if (!text.empty()) inputs["sentence"] = text;
        emit(opt, "sentence compile", inputs, result, human);
        return 0;
    }
    if (f_check->parsed()) {
        chainlab::ring_table R = build_ring();
        chainlab::family U = chainlab::named_family(name);
        chainlab::cover_report rep = chainlab::covers(U, R);
        json result = cover_json(U, R, rep);
        std::string human = U.name + " on " + R.spec() + ": covers " +
                            yesno(rep.covers) + "\n";
        if (rep.failing_point)
            human += "  failing point " +
                     tuple_json(R, *rep.failing_point).dump() + "\n";
        emit(opt, "family check", {{"family", name}, {"ring", ring_spec}},
             result, human);
        return 0;
    }
    if (f_compare->parsed()) {
        chainlab::family U = chainlab::named_family(name);
        chainlab::family V = chainlab::named_family(second);
        auto rep = chainlab::covering_equivalent_on(U, V, chainlab::build_suite());
        json rows = json::array();
        std::string human;
        for (const auto& row : rep.rows) {
            rows.push_back({{"ring", row.ring_spec},
                            {name, row.first_covers},
                            {second, row.second_covers}});
            human += row.ring_spec + ": " + yesno(row.first_covers) + " / " +
                     yesno(row.second_covers) + "\n";
        }
        json result;
        result["rows"] = rows;
        if (rep.separating_ring) {
            result["separating_ring"] = *rep.separating_ring;
            human += "separated by " + *rep.separating_ring + "\n";
        } else {
            result["verdict"] = "indistinguishable on this suite";
            human += "indistinguishable on this suite\n";
        }
        emit(opt, "family compare", {{"first", name}, {"second", second}},
             result, human);
        return 0;
    }
    if (d_blowup->parsed()) {
        chainlab::ring_table R = build_ring();
        chainlab::descent_report_t rep = chainlab::descent_report(R);
        json result;
        result["ring"] = rep.ring_spec;
        result["sizes"] = {{"A", rep.size_a},
                           {"B", rep.size_b},
                           {"Y", rep.size_y},
                           {"X", rep.size_x}};
        result["surjective"] = rep.surjective;
        result["complement_injective"] = rep.complement_injective;
        result["cocartesian"] = rep.cocartesian;
        std::string human = R.spec() + ": cocartesian " +
                            yesno(rep.cocartesian) + "\n";
        if (rep.collision) {
            result["collision"] = {
                {"base", json::array({R.label(rep.collision->base[0]),
                                      R.label(rep.collision->base[1])})},
                {"line1", proj_json(R, rep.collision->line1)},
                {"line2", proj_json(R, rep.collision->line2)}};
            human += "  collision over (" + R.label(rep.collision->base[0]) +
                     ", " + R.label(rep.collision->base[1]) + ")\n";
        }
        emit(opt, "descent blowup", {{"ring", ring_spec}}, result, human);
        return 0;
    }
    if (classify->parsed()) {
        chainlab::ring_table R = build_ring();
        chainlab::chain_classification cl = chainlab::classify_chain(R);
        json result;
        result["case"] = chainlab::to_string(cl.kase);
        result["p"] = cl.residue_char;
        result["n"] = cl.nilpotency_index;
        result["q"] = cl.residue_field_size;
        result["char"] = cl.characteristic;
        result["uniformizer"] = R.label(cl.uniformizer);
        result["m_equals_p"] = cl.maximal_ideal_is_p;
        std::string human = R.spec() + ": " + chainlab::to_string(cl.kase) +
                            " (p=" + std::to_string(cl.residue_char) +
                            ", n=" + std::to_string(cl.nilpotency_index) +
                            ", q=" + std::to_string(cl.residue_field_size) +
                            ")\n";
        emit(opt, "classify", {{"ring", ring_spec}}, result, human);
        return 0;
    }
    if (p_colim->parsed()) {
        chainlab::ring_table R = build_ring();
        chainlab::ring_table P = chainlab::perfection_colim(R);
        json result;
        result["size"] = P.size();
        result["elements"] = P.labels();
        std::string human = R.spec() + " -> perfection of size " +
                            std::to_string(P.size()) + "\n";
        emit(opt, "perfection colim", {{"ring", ring_spec}}, result, human);
        return 0;
    }
    if (t_check->parsed()) {
        chainlab::ring_table R = build_ring();
        chainlab::check_result c5 = chainlab::division_lemma_check(R);
        chainlab::check_result cd = chainlab::tilt_domain_check(R, opt.depth);
        json result;
        result["division_lemma"] = c5.ok;
        result["domain_consequences"] = cd.ok;
        if (c5.witness)
            result["division_witness"] = json::array(
                {R.label(c5.witness->first), R.label(c5.witness->second)});
        if (cd.witness)
            result["domain_witness"] = json::array(
                {R.label(cd.witness->first), R.label(cd.witness->second)});
        std::string human = R.spec() + ": division lemma " + yesno(c5.ok) +
                            ", domain consequences " + yesno(cd.ok) + "\n";
        emit(opt, "tilt check", {{"ring", ring_spec}, {"depth", opt.depth}},
             result, human);
        return 0;
    }
    if (t_divide->parsed()) {
        chainlab::ring_table R = build_ring();
        chainlab::elem a =
            chainlab::eval_element(R, chainlab::int_poly::parse(a_expr));
        chainlab::elem b =
            chainlab::eval_element(R, chainlab::int_poly::parse(b_expr));
        auto d = chainlab::chain_divide(R, {opt.depth, a}, {opt.depth, b});
        json result;
        result["depth"] = d.quotient.depth;
        json levels = json::array();
        for (chainlab::elem e : d.levels) levels.push_back(R.label(e));
        result["levels"] = levels;
        result["verified"] = d.verified;
        if (d.failed_level) result["failed_level"] = *d.failed_level;
        std::string human = "quotient chain of depth " +
                            std::to_string(d.quotient.depth) + ", verified " +
                            yesno(d.verified) + "\n";
        emit(opt, "tilt divide",
             {{"ring", ring_spec}, {"depth", opt.depth}, {"a", a_expr},
              {"b", b_expr}},
             result, human);
        return 0;
    }
    if (s_run->parsed()) {
        chainlab::acceptance_result r = chainlab::run_acceptance_suite();
        if (opt.as_json) {
            std::cout << chainlab::suite_report_json(r).dump(2) << "\n";
        } else {
            for (const auto& c : r.criteria)
                std::cout << (c.pass ? "PASS" : "FAIL") << "  criterion "
                          << c.index << ": " << c.title << " (" << c.detail
                          << ")\n";
            std::cout << (r.all_pass ? "all criteria passed"
                                     : "some criteria failed")
                      << "\n";
        }
        return r.all_pass ? 0 : 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const chainlab::error& e) {
        json env;
        env["error"] = {{"name", e.name()}, {"message", e.what()}};
        std::cout << env.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
