#include "wisp/harness/tables.hpp"

#include "wisp/errors.hpp"
#include "wisp/reconstruction/norm_estimate.hpp"

#include <cmath>

namespace wisp {

namespace {

Box box1(double a, double b)
{
    return Box{{a, 0.0, 0.0}, {b, 0.0, 0.0}};
}

Box box2(double a1, double b1, double a2, double b2)
{
    return Box{{a1, a2, 0.0}, {b1, b2, 0.0}};
}

Box box3(double a1, double b1, double a2, double b2, double a3, double b3)
{
    return Box{{a1, a2, a3}, {b1, b2, b3}};
}

ExperimentConfig base(const std::string& name, int dim, int nodes, double tau, double T, const char* f_true,
                      const char* R, double delta0)
{
    ExperimentConfig c;
    c.name = name;
    c.dim = dim;
    c.nodes = nodes;
    c.tau = tau;
    c.final_time = T;
    c.f_true = FunctionSpec::parse(f_true);
    c.R = FunctionSpec::parse(R);
    c.noise.delta0 = delta0;
    return c;
}

TableRow row(ExperimentConfig c, const Box& box, double K, double f0, int M, double err)
{
    c.removed_box = box;
    c.K = K;
    c.f0 = FunctionSpec::constant(f0);
    return TableRow{std::move(c), M, err};
}

std::vector<TableRow> table1()
{
    const auto b = [](const char* name, double d0) {
        return base(name, 1, 101, 0.01, 1.0, "cos(pi*x)+1", "x+t+1", d0);
    };
    return {
        row(b("table1_row1", 0.01), box1(0.1, 0.9), 0.02, 1.0, 113, 0.0186),
        row(b("table1_row2", 0.02), box1(0.1, 0.9), 0.02, 1.0, 84, 0.0291),
        row(b("table1_row3", 0.04), box1(0.1, 0.9), 0.02, 1.0, 73, 0.0332),
        row(b("table1_row4", 0.08), box1(0.1, 0.9), 0.02, 1.0, 65, 0.0379),
        row(b("table1_row5", 0.01), box1(0.2, 0.8), 0.04, 1.0, 118, 0.0115),
        row(b("table1_row6", 0.01), box1(0.05, 0.95), 0.015, 1.0, 122, 0.0277),
    };
}

std::vector<TableRow> table2()
{
    const auto b = [](const char* name, const char* f) {
        return base(name, 1, 101, 0.01, 1.0, f, "2+pi^2*t^2", 0.05);
    };
    const Box omega = box1(0.1, 0.9);
    return {
        row(b("table2_a", "x"), omega, 0.1, 0.5, 6, 0.0141),
        row(b("table2_b", "sin(pi*x)+x"), omega, 0.1, 2.5, 43, 0.0203),
        row(b("table2_c", "cos(2*pi*x)/2+1"), omega, 0.1, 1.0, 179, 0.0755),
        row(b("table2_d", "1-abs(2*x-1)"), omega, 0.1, 0.5, 223, 0.1141),
    };
}

std::vector<TableRow> table3()
{
    const auto b = [](const char* name) {
        return base(name, 2, 101, 0.01, 1.3, "cos(pi*x1)*cos(pi*x2)/2+1", "5+pi^2*t^2", 0.05);
    };
    return {
        row(b("table3_row1"), box2(0.2, 0.8, 0.2, 0.8), 3.0, 1.0, 31, 0.0098),
        row(b("table3_row2"), box2(0.1, 0.9, 0.1, 0.9), 1.7, 1.0, 28, 0.0229),
        row(b("table3_row3"), box2(0.05, 0.95, 0.05, 0.95), 1.0, 1.0, 27, 0.0296),
        row(b("table3_row4"), box2(0.1, 1.0, 0.1, 0.9), 1.3, 1.0, 27, 0.0346),
        row(b("table3_row5"), box2(0.1, 1.0, 0.1, 1.0), 1.0, 1.5, 74, 0.0753),
    };
}

std::vector<TableRow> table4()
{
    const auto b = [](const char* name, const char* f) {
        return base(name, 2, 101, 0.01, 1.3, f, "x1-x2+3*t+2", 0.05);
    };
    const Box omega = box2(0.1, 0.9, 0.0, 0.9);
    return {
        row(b("table4_a", "cos(pi*x1)/2+1"), omega, 0.27, 1.0, 33, 0.0270),
        row(b("table4_b", "3-exp(1-(x1+x2)/2)"), omega, 0.27, 1.0, 41, 0.0297),
        row(b("table4_c", "cos(pi*x1)*cos(2*pi*x2)/2+1"), omega, 0.27, 1.0, 119, 0.0722),
    };
}

std::vector<TableRow> table5()
{
    const auto b = [](const char* name) {
        return base(name, 3, 51, 0.02, 1.7, "cos(pi*x1)*cos(pi*x2)*cos(pi*x3)/2+1", "2+3*pi^2*t^2", 0.05);
    };
    return {
        row(b("table5_row1"), box3(0.08, 0.92, 0.08, 0.92, 0.08, 0.92), 22.0, 1.0, 40, 0.0183),
        row(b("table5_row2"), box3(0.04, 0.96, 0.04, 0.96, 0.04, 0.96), 12.0, 1.0, 38, 0.0249),
        row(b("table5_row3"), box3(0.04, 0.96, 0.04, 0.96, 0.04, 1.0), 10.0, 1.0, 38, 0.0307),
        row(b("table5_row4"), box3(0.04, 0.96, 0.04, 1.0, 0.04, 1.0), 7.5, 1.0, 40, 0.0387),
        row(b("table5_row5"), box3(0.04, 1.0, 0.04, 1.0, 0.04, 1.0), 6.0, 0.5, 39, 0.0884),
    };
}

std::vector<TableRow> table6()
{
    const auto b = [](const char* name, const char* f) {
        return base(name, 3, 51, 0.02, 1.7, f, "5+pi^2*t^2", 0.05);
    };
    const Box omega = box3(0.04, 0.96, 0.04, 1.0, 0.04, 1.0);
    return {
        row(b("table6_a", "(x1-1/5)*(x2-1/2)^2-cos(pi*x1)*x3/2+x2*exp(-x3)/2"), omega, 3.5, 1.0, 64, 0.0345),
        row(b("table6_b", "cos(pi*x1)*cos(2*pi*x2)*cos(pi*x3)/2+1"), omega, 3.5, 1.0, 120, 0.0788),
        row(b("table6_c", "cos(pi*x1)*cos(2*pi*x2)*cos(2*pi*x3)/2+1"), omega, 3.5, 1.0, 101, 0.1198),
    };
}

} // namespace

std::vector<std::string> table_names()
{
    return {"table1", "table2", "table3", "table4", "table5", "table6"};
}

void set_resolution(ExperimentConfig& c, int nodes)
{
    if (nodes < 3)
        throw ConfigError("resolution override: nodes must be >= 3");
    c.nodes = nodes;
    c.tau = c.final_time / std::round(c.final_time * (nodes - 1));
}

double rescaled_tuning_constant(const ExperimentConfig& native, const ExperimentConfig& scaled, int iterations)
{
    const double a_native = estimate_norm_bound(make_setup(native), iterations).value;
    const double a_scaled = estimate_norm_bound(make_setup(scaled), iterations).value;
    if (!(a_native > 0.0))
        throw ConfigError(native.name + ": operator norm vanishes; K cannot be rescaled");
    return native.K * a_scaled / a_native;
}

std::vector<TableRow> reference_table(const std::string& name, std::optional<int> nodes, std::uint64_t seed)
{
    std::vector<TableRow> rows;
    if (name == "table1")
        rows = table1();
    else if (name == "table2")
        rows = table2();
    else if (name == "table3")
        rows = table3();
    else if (name == "table4")
        rows = table4();
    else if (name == "table5")
        rows = table5();
    else if (name == "table6")
        rows = table6();
    else
        throw ConfigError("unknown table '" + name + "' (expected table1 .. table6)");

    for (std::size_t r = 0; r < rows.size(); ++r) {
        rows[r].config.noise.seed = seed + r;
        if (nodes)
            set_resolution(rows[r].config, *nodes);
    }
    return rows;
}

} // namespace wisp
