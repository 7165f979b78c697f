#include "qks/cli.hpp"

#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "qks/catabolism.hpp"
#include "qks/errors.hpp"
#include "qks/json_io.hpp"
#include "qks/shuffle.hpp"

namespace qks {

namespace {

LaurentPoly postprocess(LaurentPoly p, const JobSpec& job, const Quiver& q) {
    if (job.collapse_t) p = p.substitute(collapse_substitution(q));
    if (job.truncate >= 0) p = p.truncate_parameter_degree(job.truncate);
    return p;
}

nlohmann::ordered_json poly_json(const LaurentPoly& p) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        obj[it->first.str()] = it->second.get_str();
    return obj;
}

LaurentPoly compute_one(const CurrentData& data, const PartitionTuple& lambda,
                        const std::string& method,
                        const TensorSchurElement* hl_cache) {
    if (method == "operator")
        return hl_cache ? hl_cache->coefficient(lambda)
                        : kostka_shoji_operator(data, lambda);
    if (method == "kostant") return kostant_coefficient(data, lambda);
    if (method == "catabolism") return enumerate_catabolizable(data, lambda);
    throw SchemaError("", "unknown method '" + method + "'");
}

int run_compute(const JobSpec& job, std::ostream& out) {
    const CurrentData& data = *job.data;
    PartitionTuple lambda = *job.lambda;
    LaurentPoly k = compute_one(data, lambda, job.method, nullptr);
    k = postprocess(k, job, data.cs.quiver);
    if (job.json) {
        nlohmann::ordered_json j;
        j[tuple_str(lambda)] = poly_json(k);
        out << j.dump() << "\n";
    } else {
        out << k.str() << "\n";
    }
    return 0;
}

int run_table(const JobSpec& job, std::ostream& out) {
    const CurrentData& data = *job.data;
    TensorSchurElement hl(0);
    const TensorSchurElement* cache = nullptr;
    if (job.method == "operator") {
        hl = hl_function(data);
        cache = &hl;
    }
    auto table = weight_table(data.flags.nu, data.cs.total_weight_size());
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& lambda : table) {
        LaurentPoly k = compute_one(data, lambda, job.method, cache);
        k = postprocess(k, job, data.cs.quiver);
        if (job.json)
            j[tuple_str(lambda)] = poly_json(k);
        else
            out << tuple_str(lambda) << "\t" << k.str() << "\n";
    }
    if (job.json) out << j.dump() << "\n";
    return 0;
}

int run_psi(const JobSpec& job, std::ostream& out) {
    MultiVarPoly psi = psi_class(*job.data);
    LaurentPoly p = postprocess(psi.p, job, job.data->cs.quiver);
    if (job.json) {
        nlohmann::ordered_json j;
        j["psi"] = poly_json(p);
        out << j.dump() << "\n";
    } else {
        out << p.str() << "\n";
    }
    return 0;
}

struct CompareReport {
    int checked = 0;
    bool engines_agree = true;
    bool probes_clean = true;
};

// True when some table coefficient of the instance separates the two engines.
bool engines_disagree(const CurrentSequence& cs, PartitionTuple* witness) {
    try {
        CurrentData d = CurrentData::build(cs);
        TensorSchurElement h = hl_function(d);
        for (const auto& lambda : weight_table(d.flags.nu, d.cs.total_weight_size()))
            if (!(h.coefficient(lambda) == kostant_coefficient(d, lambda))) {
                if (witness) *witness = lambda;
                return true;
            }
        return false;
    } catch (const std::exception&) {
        return false;
    }
}

void dump_disagreement(const CurrentSequence& cs, std::ostream& err) {
    CurrentSequence small =
        minimize_instance(cs, [](const CurrentSequence& c) {
            return engines_disagree(c, nullptr);
        });
    PartitionTuple witness;
    engines_disagree(small, &witness);
    CurrentData d = CurrentData::build(small);
    err << "engine disagreement; minimized reproducer:\n"
        << "  spec: " << spec_to_json(small) << "\n"
        << "  lambda: " << tuple_str(witness) << "\n"
        << "  operator: " << hl_function(d).coefficient(witness).str() << "\n"
        << "  kostant:  " << kostant_coefficient(d, witness).str() << "\n";
}

// Operator vs Kostant on every table entry; catabolism and the positivity
// probe where their hypotheses hold.
CompareReport compare_instance(const CurrentData& data, std::ostream& err) {
    CompareReport rep;
    TensorSchurElement hl = hl_function(data);
    bool dominant = is_ia_dominant(data.cs);
    bool cat_ok = data.cls.nonbranching && dominant;
    auto table = weight_table(data.flags.nu, data.cs.total_weight_size());
    for (const auto& lambda : table) {
        LaurentPoly op = hl.coefficient(lambda);
        LaurentPoly ko = kostant_coefficient(data, lambda);
        ++rep.checked;
        if (!(op == ko)) {
            rep.engines_agree = false;
            dump_disagreement(data.cs, err);
            return rep;
        }
        if (dominant && !op.nonnegative()) {
            rep.probes_clean = false;
            err << "positivity violation under dominant weights at lambda = "
                << tuple_str(lambda) << "\n"
                << "  spec: " << spec_to_json(data.cs) << "\n"
                << "  value: " << op.str() << "\n";
        }
        if (cat_ok) {
            std::vector<std::pair<MultiTableau, Monomial>> survivors;
            LaurentPoly cat = enumerate_catabolizable(data, lambda, &survivors);
            if (!(cat == op)) {
                rep.probes_clean = false;
                err << "catabolism mismatch at lambda = " << tuple_str(lambda) << "\n"
                    << "  spec: " << spec_to_json(data.cs) << "\n"
                    << "  operator:   " << op.str() << "\n"
                    << "  catabolism: " << cat.str() << "\n"
                    << "  surviving tableaux (" << survivors.size() << "):\n";
                for (const auto& [t, w] : survivors)
                    err << "weight " << w.str() << "\n" << t.str() << "\n";
            }
        }
    }
    return rep;
}

int run_compare(const JobSpec& job, std::ostream& out, std::ostream& err) {
    int exit_code = 0;
    int instances = 0, checked = 0;
    auto absorb = [&](const CompareReport& rep) {
        ++instances;
        checked += rep.checked;
        if (!rep.engines_agree) exit_code = 3;
        if (!rep.probes_clean && exit_code == 0) exit_code = 4;
        return rep.engines_agree;
    };
    if (job.data) {
        if (!absorb(compare_instance(*job.data, err))) {
            out << "engines disagree\n";
            return 3;
        }
    }
    for (int t = 0; t < job.trials; ++t) {
        CurrentSequence cs = random_instance(job.seed + t);
        CurrentData data = CurrentData::build(std::move(cs));
        if (!absorb(compare_instance(data, err))) {
            out << "engines disagree (trial " << t << ")\n";
            return 3;
        }
    }
    if (exit_code == 0)
        out << "all methods agree (" << instances << " instances, " << checked
            << " coefficients)\n";
    else
        out << "conjecture probe violated; see diagnostics\n";
    return exit_code;
}

int run_catabolism(const JobSpec& job, std::ostream& out) {
    const CurrentData& data = *job.data;
    if (job.lambda) {
        LaurentPoly k = postprocess(enumerate_catabolizable(data, *job.lambda), job,
                                    data.cs.quiver);
        if (job.json) {
            nlohmann::ordered_json j;
            j[tuple_str(*job.lambda)] = poly_json(k);
            out << j.dump() << "\n";
        } else {
            out << k.str() << "\n";
        }
        return 0;
    }
    JobSpec tab = job;
    tab.method = "catabolism";
    tab.cmd = JobSpec::Cmd::Table;
    return run_table(tab, out);
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
    try {
        switch (job.cmd) {
            case JobSpec::Cmd::Compute:
                if (!job.data || !job.lambda)
                    throw SchemaError("", "compute requires --spec and --lambda");
                return run_compute(job, out);
            case JobSpec::Cmd::Table:
                if (!job.data) throw SchemaError("", "table requires --spec");
                return run_table(job, out);
            case JobSpec::Cmd::Catabolism:
                if (!job.data) throw SchemaError("", "catabolism requires --spec");
                return run_catabolism(job, out);
            case JobSpec::Cmd::ShufflePsi:
                if (!job.data) throw SchemaError("", "shuffle-psi requires --spec");
                return run_psi(job, out);
            case JobSpec::Cmd::Compare:
                if (!job.data && job.trials <= 0)
                    throw SchemaError("", "compare requires --spec or --trials");
                return run_compare(job, out, err);
        }
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const BranchingVertex& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonPartitionWeight& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

CurrentSequence minimize_instance(
    CurrentSequence cs, const std::function<bool(const CurrentSequence&)>& pred) {
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        // drop a whole step
        for (std::size_t k = 0; k < cs.steps.size(); ++k) {
            CurrentSequence cand = cs;
            cand.steps.erase(cand.steps.begin() + k);
            if (pred(cand)) {
                cs = std::move(cand);
                shrunk = true;
                break;
            }
        }
        if (shrunk) continue;
        // trim a step's width (dropping the last weight entry)
        for (std::size_t k = 0; k < cs.steps.size(); ++k) {
            if (cs.steps[k].width <= 1) continue;
            CurrentSequence cand = cs;
            cand.steps[k].width -= 1;
            cand.steps[k].mu.parts.pop_back();
            if (pred(cand)) {
                cs = std::move(cand);
                shrunk = true;
                break;
            }
        }
        if (shrunk) continue;
        // lower one weight entry
        for (std::size_t k = 0; k < cs.steps.size() && !shrunk; ++k) {
            auto& parts = cs.steps[k].mu.parts;
            for (std::size_t r = 0; r < parts.size(); ++r) {
                int below = (r + 1 < parts.size()) ? parts[r + 1] : 0;
                if (parts[r] <= below) continue;
                CurrentSequence cand = cs;
                cand.steps[k].mu.parts[r] -= 1;
                if (pred(cand)) {
                    cs = std::move(cand);
                    shrunk = true;
                    break;
                }
            }
        }
    }
    return cs;
}

CurrentSequence random_instance(unsigned long long seed, int max_total_width,
                                int max_weight) {
    std::mt19937_64 gen(seed * 0x9e3779b97f4a7c15ULL + 1);
    auto pick = [&](int n) { return static_cast<int>(gen() % n); };

    CurrentSequence cs;
    switch (pick(4)) {
        case 0:  // Jordan
            cs.quiver.vertices = {"0"};
            cs.quiver.arrows = {{"t_00", 0, 0}};
            break;
        case 1:  // A2
            cs.quiver.vertices = {"0", "1"};
            cs.quiver.arrows = {{"t_01", 0, 1}};
            break;
        case 2:  // 2-cycle
            cs.quiver.vertices = {"0", "1"};
            cs.quiver.arrows = {{"t_01", 0, 1}, {"t_10", 1, 0}};
            break;
        default:  // 3-cycle
            cs.quiver.vertices = {"0", "1", "2"};
            cs.quiver.arrows = {{"t_01", 0, 1}, {"t_12", 1, 2}, {"t_20", 2, 0}};
            break;
    }
    int m = 1 + pick(4);
    int width_left = max_total_width;
    for (int k = 0; k < m && width_left > 0; ++k) {
        int a = 1 + pick(std::min(3, width_left));
        width_left -= a;
        int v = pick(cs.quiver.nvertices());
        int size = pick(max_weight + 1);
        // random partition of `size` with at most a rows
        std::vector<int> mu;
        int rest = size, hi = size;
        while (rest > 0 && static_cast<int>(mu.size()) < a) {
            int part = 1 + pick(std::min(hi, rest));
            mu.push_back(part);
            hi = part;
            rest -= part;
        }
        if (rest > 0 && !mu.empty()) mu[0] += rest;  // fold leftovers into row 1
        else if (rest > 0) mu.push_back(rest);
        std::sort(mu.begin(), mu.end(), std::greater<int>());
        mu.resize(a, 0);
        cs.steps.push_back({v, a, DominantWeight(std::move(mu))});
    }
    return cs;
}

}  // namespace qks
