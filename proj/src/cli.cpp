#include "boxjenkins/cli.hpp"

#include "boxjenkins/error.hpp"
#include "boxjenkins/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace bj::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open input file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text)) {
        throw Error("cannot write '" + path + "'");
    }
}

std::optional<ArimaOrder> parse_order(const std::string& text) {
    ArimaOrder order;
    char c1 = 0;
    char c2 = 0;
    std::istringstream in(text);
    if (!(in >> order.p >> c1 >> order.d >> c2 >> order.q) || c1 != ',' || c2 != ',' || !in.eof()) {
        return std::nullopt;
    }
    return order;
}

struct Model {
    FittedModel fitted;
    double criterion;
};

Model choose_model(const TimeSeries& series, const RunConfig& config) {
    FitOptions fit_options;
    fit_options.mean = config.drift ? MeanTerm::Always : MeanTerm::Auto;
    if (config.order) {
        FittedModel m = fit(series, *config.order, fit_options);
        const double c = criterion_value(m, config.criterion);
        return {std::move(m), c};
    }
    const int max_d = std::min<int>(kMaxDifferencing, static_cast<int>(series.size()) - 3);
    if (max_d < 0) {
        throw InsufficientData("series too short for automatic order selection");
    }
    const int d = select_d(series, max_d);
    GridOptions grid;
    grid.criterion = config.criterion;
    grid.fit = fit_options;
    SelectionResult sel = grid_search(series, d, grid);
    const double c = criterion_value(sel.best, config.criterion);
    return {std::move(sel.best), c};
}

// Residual checks are reported, never required: skip them when the residual
// sample cannot support the tests.
std::optional<DiagnosticsReport> try_diagnose(const FittedModel& model) {
    const int fitted = model.order.p + model.order.q;
    const int h = std::max(default_ljung_box_lags(model.residuals.size()), fitted + 1);
    try {
        return diagnose(model, h);
    } catch (const Error&) {
        return std::nullopt;
    }
}

void describe_model(ReportData& report, const Model& model, Criterion criterion) {
    report.order = model.fitted.order;
    report.params = model.fitted.params;
    report.loglik = model.fitted.loglik;
    report.criterion = std::pair{criterion, model.criterion};
}

std::string metrics_csv(const AccuracyReport& m) {
    return "dataset,mae,mape_percent,rmse,k\n" + m.label + "," + format_number(m.mae) + "," + format_number(m.mape) +
           "," + format_number(m.rmse) + "," + std::to_string(m.k) + "\n";
}

std::string model_csv(const Model& model, Criterion criterion) {
    const auto& m = model.fitted;
    std::string out = "name,value\n";
    out += "p," + std::to_string(m.order.p) + "\n";
    out += "d," + std::to_string(m.order.d) + "\n";
    out += "q," + std::to_string(m.order.q) + "\n";
    out += "mu," + format_number(m.params.mu) + "\n";
    for (std::size_t i = 0; i < m.params.beta.size(); ++i) {
        out += "beta" + std::to_string(i + 1) + "," + format_number(m.params.beta[i]) + "\n";
    }
    for (std::size_t j = 0; j < m.params.alpha.size(); ++j) {
        out += "alpha" + std::to_string(j + 1) + "," + format_number(m.params.alpha[j]) + "\n";
    }
    out += "sigma2," + format_number(m.params.sigma2) + "\n";
    out += "loglik," + format_number(m.loglik) + "\n";
    out += std::string(to_string(criterion)) + "," + format_number(model.criterion) + "\n";
    return out;
}

std::string run_identify(const RunConfig& config, const Dataset& data) {
    const auto& series = data.series;
    const int max_d = std::min<int>(kMaxDifferencing, static_cast<int>(series.size()) - 3);
    if (max_d < 0) {
        throw InsufficientData("series too short for identification");
    }
    ReportData::Identification id;
    id.d = select_d(series, max_d);
    const auto w = difference(series, id.d).values;
    const int max_lag = config.max_lag > 0 ? config.max_lag : default_max_lag(w.size());
    id.acf = acf(w, max_lag);
    id.pacf = pacf(w, max_lag);
    id.pattern = classify(id.acf, id.pacf, w.size());

    if (config.format == Format::Csv) {
        std::string out = "lag,acf,pacf,band\n";
        for (std::size_t k = 1; k < id.acf.size(); ++k) {
            out += std::to_string(k) + "," + format_number(id.acf[k].value) + "," +
                   format_number(id.pacf[k - 1].value) + "," + format_number(id.acf[k].band) + "\n";
        }
        return out;
    }
    ReportData report;
    report.command = "identify";
    report.dataset = data.name;
    report.identification = std::move(id);
    return emit_report(report);
}

std::string run_model_command(const RunConfig& config, const Dataset& data) {
    const Model model = choose_model(data.series, config);
    ReportData report;
    report.dataset = data.name;
    describe_model(report, model, config.criterion);
    report.diagnostics = try_diagnose(model.fitted);

    const FittedValues fitted = fitted_values(model.fitted);
    std::optional<ForecastResult> fc;
    if (config.command == Command::Forecast || (config.command == Command::Backtest && config.horizon > 0)) {
        fc = forecast(model.fitted, config.horizon, config.level);
    }

    std::string text;
    switch (config.command) {
        case Command::Fit:
            report.command = "fit";
            text = config.format == Format::Csv ? model_csv(model, config.criterion) : "";
            break;
        case Command::Forecast:
            report.command = "forecast";
            report.forecast = fc;
            if (config.format == Format::Csv) {
                text = "step,forecast,se,lower,upper\n";
                for (int j = 0; j < fc->horizon; ++j) {
                    const auto i = static_cast<std::size_t>(j);
                    text += std::to_string(j + 1) + "," + format_number(fc->points[i]) + "," +
                            format_number(fc->se[i]) + "," + format_number(fc->lower[i]) + "," +
                            format_number(fc->upper[i]) + "\n";
                }
            }
            break;
        default: {
            report.command = "backtest";
            const auto y = data.series.values();
            const std::size_t skip = fitted.first_defined;
            const std::vector<double> actual(y.begin() + static_cast<std::ptrdiff_t>(skip), y.end());
            const std::vector<double> predicted(fitted.values.begin() + static_cast<std::ptrdiff_t>(skip),
                                                fitted.values.end());
            const AccuracyRow row{data.name, actual, predicted};
            report.metrics = bj::report(std::span(&row, 1)).front();
            text = config.format == Format::Csv ? metrics_csv(*report.metrics) : "";
            break;
        }
    }
    if (!config.plot_data.empty()) {
        write_file(config.plot_data, emit_plot_data(data, fitted, fc.value_or(ForecastResult{})));
    }
    return config.format == Format::Json ? emit_report(report) : text;
}

std::string run_evaluate(const RunConfig& config, const std::string& text) {
    const PairedColumns cols = parse_paired_csv(text, config.column, config.forecast_column);
    const AccuracyRow row{config.column, cols.actual, cols.forecast};
    ReportData report;
    report.command = "evaluate";
    report.dataset = config.column;
    report.metrics = bj::report(std::span(&row, 1)).front();
    return config.format == Format::Csv ? metrics_csv(*report.metrics) : emit_report(report);
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const std::string text = read_file(config.input);
        std::string result;
        if (config.command == Command::Evaluate) {
            result = run_evaluate(config, text);
        } else {
            const Dataset data = parse_csv(text, config.column);
            result = config.command == Command::Identify ? run_identify(config, data) : run_model_command(config, data);
        }
        if (config.output.empty()) {
            out << result;
        } else {
            write_file(config.output, result);
        }
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDataError;
    }
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Box-Jenkins ARIMA identification, fitting, forecasting and accuracy evaluation", "arimafx"};
    RunConfig config;

    const std::map<std::string, Command> commands{{"identify", Command::Identify},
                                                  {"fit", Command::Fit},
                                                  {"forecast", Command::Forecast},
                                                  {"evaluate", Command::Evaluate},
                                                  {"backtest", Command::Backtest}};
    const std::map<std::string, Criterion> criteria{{"aic", Criterion::AIC}, {"bic", Criterion::BIC}};
    const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}};

    std::string command_text;
    std::string criterion_text = "bic";
    std::string format_text = "json";
    std::string order_text;
    bool auto_order = false;
    bool horizon_given = false;
    app.add_option("command", command_text, "identify | fit | forecast | evaluate | backtest")
        ->required()
        ->check(CLI::IsMember(commands));
    app.add_option("--input", config.input, "CSV file with a date column")->required();
    app.add_option("--column", config.column, "value column (actual column for evaluate)")
        ->capture_default_str();
    app.add_option("--forecast-column", config.forecast_column, "forecast column (evaluate)");
    auto* order_opt = app.add_option("--order", order_text, "explicit order p,d,q");
    auto* auto_opt = app.add_flag("--auto", auto_order, "select d by variance and (p,q) by criterion (default)");
    order_opt->excludes(auto_opt);
    app.add_option("--criterion", criterion_text, "aic | bic")->check(CLI::IsMember(criteria));
    auto* horizon_opt = app.add_option("--horizon", config.horizon, "forecast steps")->check(CLI::Range(1, 100000));
    app.add_option("--level", config.level, "prediction interval level")->check(CLI::Range(0.0, 1.0));
    app.add_option("--max-lag", config.max_lag, "correlogram depth (identify)")->check(CLI::PositiveNumber);
    app.add_flag("--drift", config.drift, "estimate a mean (drift) also when d > 0");
    app.add_option("--format", format_text, "json | csv")->check(CLI::IsMember(formats));
    app.add_option("--output", config.output, "write the report here instead of stdout");
    app.add_option("--plot-data", config.plot_data, "write date,actual,fitted,forecast,lower,upper CSV here");

    std::vector<std::string> storage{"arimafx"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : storage) {
        argv.push_back(s.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        config.command = commands.at(command_text);
        config.criterion = criteria.at(criterion_text);
        config.format = formats.at(format_text);
        if (!order_text.empty()) {
            config.order = parse_order(order_text);
            if (!config.order) {
                throw CLI::ValidationError("--order", "expected p,d,q, got '" + order_text + "'");
            }
        }
        if (config.command == Command::Evaluate && config.forecast_column.empty()) {
            throw CLI::RequiredError("--forecast-column is required by evaluate");
        }
        if (config.level <= 0.0 || config.level >= 1.0) {
            throw CLI::ValidationError("--level", "must lie strictly between 0 and 1");
        }
        horizon_given = horizon_opt->count() > 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }
    if (config.command == Command::Backtest && !horizon_given) {
        config.horizon = 0;  // backtest forecasts only when asked
    }
    return execute(config, out, err);
}

}  // namespace bj::cli
