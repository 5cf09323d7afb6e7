#include "sfent/curves.hpp"

#include "sfent/error.hpp"
#include "sfent/factors.hpp"
#include "sfent/series.hpp"

#include <map>
#include <optional>

namespace sfent {

namespace {

struct Series {
    std::vector<double> Z;
    std::vector<ReportRow> rows;
};

class CurveBuilder {
public:
    CurveBuilder(const RunConfig& config, OptimizerCache& cache)
        : config_(config), cache_(cache), options_(report_options(config.quadrature))
    {
        options_.spec_1d.exec = options_.spec_2d.exec = Exec::serial;
    }

    CurveSet build(const std::string& figure)
    {
        if (figure == "fig1") return one_electron(figure, "k", hydrogenic_members(), Space::momentum);
        if (figure == "fig2") return one_electron(figure, "s", hydrogenic_members(), Space::position);
        if (figure == "fig3") return hydrogenic_entropies(figure);
        if (figure == "fig4") return one_electron(figure, "s", helium_members(), Space::position);
        if (figure == "fig5") return one_electron(figure, "k", helium_members(), Space::momentum);
        if (figure == "fig6") return helium_series(figure, {"S_F", "S_B"});
        if (figure == "fig7") return helium_series(figure, {"S_F+S_B", "NI_S_F+S_B"});
        if (figure == "fig8") return two_electron(figure, 2.0, Space::momentum);
        if (figure == "fig9") return two_electron(figure, 2.0, Space::position);
        if (figure == "fig10") return two_electron(figure, 4.0, Space::momentum);
        if (figure == "fig11") return two_electron(figure, 4.0, Space::position);
        if (figure == "fig12") return helium_series(figure, {"S_F2", "S_B2"});
        if (figure == "fig13") return helium_series(figure, {"S_F2+S_B2", "NI_S_F2+S_B2"});
        if (figure == "fig14") return helium_series(figure, {"I_F", "I_B"});
        throw Error(ErrorKind::ConfigError, "unknown figure '" + figure + "'");
    }

private:
    using Member = std::pair<std::string, AtomicModel>;

    std::vector<Member> hydrogenic_members() const
    {
        std::vector<Member> m;
        for (double Z : {2.0, 3.0, 4.0})
            m.emplace_back("Z" + format_number(Z), HydrogenicAtom(Z));
        return m;
    }

    std::vector<Member> helium_members()
    {
        return {{"Z2", optimized_helium(2.0, cache_)},
                {"NI_Z2", SplitShellModel::non_interacting(2.0)},
                {"Z3", optimized_helium(3.0, cache_)},
                {"Z4", optimized_helium(4.0, cache_)}};
    }

    CurveSet one_electron(const std::string& id, const std::string& axis, const std::vector<Member>& members,
                          Space space) const
    {
        const auto grid = config_.grid_for(id);
        const auto xs = linear_spaced(grid.lo, grid.hi, static_cast<std::size_t>(grid.points));
        CurveSet c{id, {axis}, {}};
        std::vector<StructureFactor1D> factors;
        for (const auto& [name, model] : members) {
            c.columns.push_back(name);
            factors.push_back(make_factor(model, space, Path::analytic));
        }
        for (double x : xs) {
            std::vector<double> row{x};
            for (const auto& f : factors)
                row.push_back(f(x));
            c.rows.push_back(std::move(row));
        }
        return c;
    }

    CurveSet two_electron(const std::string& id, double Z, Space space)
    {
        const auto grid = config_.grid_for(id);
        const auto xs = linear_spaced(grid.lo, grid.hi, static_cast<std::size_t>(grid.points));
        const auto f = make_pair_factor(optimized_helium(Z, cache_), space, Path::analytic);
        const Exec exec = config_.workers > 1 ? Exec::parallel : Exec::serial;
        const auto values = evaluate_grid_2d(f.evaluator, xs, xs, exec);
        const bool momentum = space == Space::momentum;
        CurveSet c{id, {momentum ? "k1" : "s1", momentum ? "k2" : "s2", momentum ? "F" : "B"}, {}};
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = 0; j < xs.size(); ++j)
                c.rows.push_back({xs[i], xs[j], values[i * xs.size() + j]});
        return c;
    }

    CurveSet hydrogenic_entropies(const std::string& id)
    {
        if (!hydrogenic_) {
            Series s;
            s.Z = config_.hydrogenic_z.values();
            s.rows = compute_rows(SystemKind::hydrogenic, s.Z, cache_, options_, config_.workers);
            hydrogenic_ = std::move(s);
        }
        CurveSet c{id, {"Z", "S_F", "S_B"}, {}};
        for (std::size_t i = 0; i < hydrogenic_->Z.size(); ++i) {
            const auto& r = checked(hydrogenic_->rows[i]);
            c.rows.push_back({hydrogenic_->Z[i], *r.S_F, *r.S_B});
        }
        return c;
    }

    CurveSet helium_series(const std::string& id, const std::vector<std::string>& names)
    {
        if (!helium_) {
            Series s;
            s.Z = config_.helium_z.values();
            s.rows = compute_rows(SystemKind::helium, s.Z, cache_, options_, config_.workers);
            helium_ = std::move(s);
        }
        CurveSet c{id, {"Z"}, {}};
        c.columns.insert(c.columns.end(), names.begin(), names.end());
        for (std::size_t i = 0; i < helium_->Z.size(); ++i) {
            const auto& r = checked(helium_->rows[i]);
            std::vector<double> row{helium_->Z[i]};
            for (const auto& n : names)
                row.push_back(column(r, n));
            c.rows.push_back(std::move(row));
        }
        return c;
    }

    static const EntropyReport& checked(const ReportRow& row)
    {
        if (row.status != "ok")
            throw Error(ErrorKind::NonConvergent, "series member " + row.system + " failed: " + row.status);
        return row.report;
    }

    static double column(const EntropyReport& r, const std::string& name)
    {
        if (name == "S_F") return *r.S_F;
        if (name == "S_B") return *r.S_B;
        if (name == "S_F+S_B") return *r.S_F + *r.S_B;
        if (name == "NI_S_F+S_B") return *r.S_F_ref + *r.S_B_ref;
        if (name == "S_F2") return *r.S_F2;
        if (name == "S_B2") return *r.S_B2;
        if (name == "S_F2+S_B2") return *r.S_F2 + *r.S_B2;
        if (name == "NI_S_F2+S_B2") return 2.0 * (*r.S_F_ref + *r.S_B_ref);
        if (name == "I_F") return *r.I_F;
        if (name == "I_B") return *r.I_B;
        throw Error(ErrorKind::ConfigError, "unknown series column " + name);
    }

    const RunConfig& config_;
    OptimizerCache& cache_;
    ReportOptions options_;
    std::optional<Series> hydrogenic_;
    std::optional<Series> helium_;
};

} // namespace

std::vector<CurveSet> build_curves(const RunConfig& config, OptimizerCache& cache)
{
    CurveBuilder b(config, cache);
    const auto& ids = config.figures.empty() ? known_figures() : config.figures;
    std::vector<CurveSet> out;
    for (const auto& id : ids)
        out.push_back(b.build(id));
    return out;
}

CurveSet build_curve(const std::string& figure, const RunConfig& config, OptimizerCache& cache)
{
    return CurveBuilder(config, cache).build(figure);
}

} // namespace sfent
