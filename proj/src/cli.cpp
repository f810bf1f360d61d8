#include "selfdesc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "selfdesc/descriptor.hpp"
#include "selfdesc/digits.hpp"
#include "selfdesc/search.hpp"

namespace selfdesc::cli {

namespace {

using nlohmann::ordered_json;

enum class OutputFormat { text, csv, json };

const std::map<std::string, OutputFormat> kFormatNames{
    {"text", OutputFormat::text}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};

void add_format_option(CLI::App* cmd, OutputFormat& format) {
    cmd->add_option("--format", format, "output format (text, csv, json)")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case))
        ->option_text("TEXT:{text,csv,json}");
}

void add_work_cap_option(CLI::App* cmd, std::optional<std::uint64_t>& cap) {
    cmd->add_option("--work-cap", cap,
                    "bound on oracle candidates examined (default " +
                        std::to_string(kDefaultWorkCap) + ")")
        ->envname("SELFDESC_WORK_CAP");
}

template <typename Range>
std::string join(const Range& items, const std::string& sep) {
    std::string out;
    bool first = true;
    for (const auto& item : items) {
        if (!first) out += sep;
        first = false;
        out += item;
    }
    return out;
}

std::string counts_csv(const std::vector<int>& counts) {
    std::vector<std::string> texts;
    texts.reserve(counts.size());
    for (int c : counts) texts.push_back(std::to_string(c));
    return join(texts, ";");
}

std::string bool_text(bool value) { return value ? "true" : "false"; }

ordered_json number_json(const DigitString& ds) {
    return ordered_json{{"digits", format_digit_string(ds)},
                        {"value", value_of(ds).to_decimal()}};
}

ordered_json numbers_json(const std::vector<DigitString>& numbers) {
    ordered_json arr = ordered_json::array();
    for (const auto& ds : numbers) arr.push_back(number_json(ds));
    return arr;
}

std::string branch_outcome_text(const SolverBranch& branch) {
    return branch.open ? "yields candidate" : "closed: " + branch.reason;
}

ordered_json trace_json(const SolverTrace& trace) {
    ordered_json arr = ordered_json::array();
    for (const auto& branch : trace.branches) {
        ordered_json entry{{"case", std::string(case_label_name(branch.label))},
                           {"outcome", branch_outcome_text(branch)}};
        if (branch.candidate) {
            entry["candidate"] = format_digit_string(*branch.candidate);
        }
        arr.push_back(entry);
    }
    return arr;
}

void emit_json(std::ostream& out, const ordered_json& payload) {
    out << payload.dump(2) << '\n';
}

void print_numbers_text(std::ostream& out, const std::vector<DigitString>& numbers) {
    for (const auto& ds : numbers) {
        out << "  " << format_digit_string(ds) << " = " << value_of(ds).to_decimal() << '\n';
    }
}

void print_trace_text(std::ostream& out, const SolverTrace& trace) {
    out << "trace:\n";
    for (const auto& branch : trace.branches) {
        out << "  " << case_label_name(branch.label) << ": ";
        if (branch.open) {
            out << "yields candidate " << format_digit_string(*branch.candidate) << '\n';
        } else {
            out << "closed: " << branch.reason << '\n';
        }
    }
}

int cmd_verify(const std::string& text, int base_value, OutputFormat format,
               std::ostream& out) {
    const Base base(base_value);
    const DigitString ds = parse_digit_string(text, base);
    std::optional<CountVector> counts;
    if (ds.size() == static_cast<std::size_t>(base_value)) {
        counts = descriptor_counts(ds);
    }
    const bool verdict = is_self_descriptive(ds);
    const std::string canonical = format_digit_string(ds);

    switch (format) {
        case OutputFormat::text: {
            out << "base: " << base_value << '\n';
            out << "digits: " << canonical << '\n';
            if (counts) {
                std::vector<std::string> texts;
                for (int c : counts->counts) texts.push_back(std::to_string(c));
                out << "counts: " << join(texts, ",") << '\n';
            } else {
                out << "counts: n/a (length " << ds.size() << " != base " << base_value << ")\n";
            }
            out << "verdict: " << (verdict ? "self-descriptive" : "not self-descriptive") << '\n';
            break;
        }
        case OutputFormat::csv: {
            out << "base,digits,counts,self_descriptive\n";
            out << base_value << ',' << canonical << ','
                << (counts ? counts_csv(counts->counts) : "") << ',' << bool_text(verdict)
                << '\n';
            break;
        }
        case OutputFormat::json: {
            ordered_json payload{{"base", base_value},
                                 {"digits", canonical},
                                 {"digit_values", ds.digits()}};
            payload["counts"] = counts ? ordered_json(counts->counts) : ordered_json(nullptr);
            payload["self_descriptive"] = verdict;
            emit_json(out, payload);
            break;
        }
    }
    return verdict ? 0 : 1;
}

int cmd_enumerate(int base_value, const std::string& method,
                  std::optional<std::uint64_t> work_cap, OutputFormat format, std::ostream& out,
                  std::ostream& err) {
    const Base base(base_value);
    std::optional<EnumerationResult> oracle;
    std::optional<EnumerationResult> solver;
    std::optional<SolverTrace> trace;
    if (method == "oracle" || method == "both") {
        oracle = brute_force_enumerate(base, work_cap);
    }
    if (method == "solver" || method == "both") {
        auto [result, t] = solver_enumerate(base);
        solver = std::move(result);
        trace = std::move(t);
    }
    const bool both = method == "both";
    const bool agree = !both || oracle->numbers == solver->numbers;
    const std::vector<DigitString>& numbers = solver ? solver->numbers : oracle->numbers;

    switch (format) {
        case OutputFormat::text: {
            out << "base: " << base_value << '\n';
            out << "method: " << method << '\n';
            out << "count: " << numbers.size() << '\n';
            print_numbers_text(out, numbers);
            if (oracle) {
                out << "work_count: " << *oracle->work_count << '\n';
            }
            if (trace) {
                print_trace_text(out, *trace);
            }
            if (both) {
                out << "agreement: oracle and solver "
                    << (agree ? "agree" : "disagree") << '\n';
            }
            break;
        }
        case OutputFormat::csv: {
            out << "base,method,digits,value\n";
            for (const auto& ds : numbers) {
                out << base_value << ',' << method << ',' << format_digit_string(ds) << ','
                    << value_of(ds).to_decimal() << '\n';
            }
            break;
        }
        case OutputFormat::json: {
            ordered_json payload{{"base", base_value}, {"method", method}};
            payload["numbers"] = numbers_json(numbers);
            if (trace) payload["trace"] = trace_json(*trace);
            if (oracle) payload["work_count"] = *oracle->work_count;
            if (both) payload["agree"] = agree;
            emit_json(out, payload);
            break;
        }
    }
    if (both && !agree) {
        err << "error: oracle (" << oracle->numbers.size() << " numbers) and solver ("
            << solver->numbers.size() << " numbers) disagree for base " << base_value << '\n';
        return 1;
    }
    return 0;
}

int cmd_construct(int base_value, OutputFormat format, std::ostream& out) {
    const DigitString ds = construct_canonical(Base(base_value));
    const std::string text = format_digit_string(ds);
    const std::string value = value_of(ds).to_decimal();
    switch (format) {
        case OutputFormat::text:
            out << "base: " << base_value << '\n';
            out << "digits: " << text << '\n';
            out << "value: " << value << '\n';
            break;
        case OutputFormat::csv:
            out << "base,digits,value\n";
            out << base_value << ',' << text << ',' << value << '\n';
            break;
        case OutputFormat::json:
            emit_json(out, ordered_json{{"base", base_value}, {"digits", text}, {"value", value}});
            break;
    }
    return 0;
}

int cmd_autobio(int base_value, OutputFormat format, std::ostream& out) {
    const auto numbers = autobiographical(Base(base_value));
    switch (format) {
        case OutputFormat::text:
            out << "base: " << base_value << '\n';
            out << "count: " << numbers.size() << '\n';
            print_numbers_text(out, numbers);
            break;
        case OutputFormat::csv:
            out << "base,digits,value\n";
            for (const auto& ds : numbers) {
                out << base_value << ',' << format_digit_string(ds) << ','
                    << value_of(ds).to_decimal() << '\n';
            }
            break;
        case OutputFormat::json: {
            ordered_json payload{{"base", base_value}};
            payload["numbers"] = numbers_json(numbers);
            emit_json(out, payload);
            break;
        }
    }
    return 0;
}

int cmd_table(int max_base, OutputFormat format, std::ostream& out) {
    if (max_base < 2) {
        throw InvalidBase("--max-base must be at least 2, got " + std::to_string(max_base));
    }
    struct Row {
        int base;
        std::vector<std::string> members;
    };
    std::vector<Row> rows;
    for (int b = 2; b <= max_base; ++b) {
        auto [result, trace] = solver_enumerate(Base(b));
        Row row{b, {}};
        for (const auto& ds : result.numbers) {
            row.members.push_back(format_digit_string(ds));
        }
        rows.push_back(std::move(row));
    }
    switch (format) {
        case OutputFormat::text:
            for (const auto& row : rows) {
                out << "base " << row.base << ": " << row.members.size();
                if (!row.members.empty()) {
                    out << "  " << join(row.members, " ");
                }
                out << '\n';
            }
            break;
        case OutputFormat::csv:
            out << "base,count,members\n";
            for (const auto& row : rows) {
                out << row.base << ',' << row.members.size() << ',' << join(row.members, ";")
                    << '\n';
            }
            break;
        case OutputFormat::json: {
            ordered_json arr = ordered_json::array();
            for (const auto& row : rows) {
                arr.push_back(ordered_json{{"base", row.base},
                                           {"count", row.members.size()},
                                           {"members", row.members}});
            }
            emit_json(out, ordered_json{{"max_base", max_base}, {"rows", arr}});
            break;
        }
    }
    return 0;
}

int cmd_crosscheck(int from, int to, std::optional<std::uint64_t> work_cap, OutputFormat format,
                   std::ostream& out) {
    const CrossCheckReport report = cross_check(from, to, work_cap);
    switch (format) {
        case OutputFormat::text:
            for (const auto& row : report.rows) {
                out << "base " << row.base << ": oracle " << row.oracle_count << ", solver "
                    << row.solver_count << ", " << (row.agree ? "agree" : "DISAGREE") << ", work "
                    << row.work_count << '\n';
            }
            out << "overall: " << (report.all_agree ? "agreement" : "disagreement") << '\n';
            break;
        case OutputFormat::csv:
            out << "base,oracle_count,solver_count,agree,work_count\n";
            for (const auto& row : report.rows) {
                out << row.base << ',' << row.oracle_count << ',' << row.solver_count << ','
                    << bool_text(row.agree) << ',' << row.work_count << '\n';
            }
            break;
        case OutputFormat::json: {
            ordered_json arr = ordered_json::array();
            for (const auto& row : report.rows) {
                arr.push_back(ordered_json{{"base", row.base},
                                           {"oracle_count", row.oracle_count},
                                           {"solver_count", row.solver_count},
                                           {"agree", row.agree},
                                           {"work_count", row.work_count}});
            }
            emit_json(out, ordered_json{{"from", report.from},
                                        {"to", report.to},
                                        {"rows", arr},
                                        {"agree", report.all_agree}});
            break;
        }
    }
    return report.all_agree ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"self-descriptive number toolkit"};
    app.name("selfdesc");
    app.require_subcommand(1);

    OutputFormat format = OutputFormat::text;
    std::optional<std::uint64_t> work_cap;
    int exit_code = 0;

    auto* verify = app.add_subcommand("verify", "check whether a digit string is self-descriptive");
    std::string verify_text;
    int verify_base = 0;
    verify->add_option("digits", verify_text, "digit string to check")->required();
    verify->add_option("--base", verify_base, "radix of the digit string")->required();
    add_format_option(verify, format);
    verify->callback([&] { exit_code = cmd_verify(verify_text, verify_base, format, out); });

    auto* enumerate = app.add_subcommand("enumerate", "list all self-descriptive numbers of a base");
    int enum_base = 0;
    std::string method = "solver";
    enumerate->add_option("--base", enum_base, "base to enumerate")->required();
    enumerate->add_option("--method", method, "oracle, solver, or both")
        ->check(CLI::IsMember({"oracle", "solver", "both"}));
    add_work_cap_option(enumerate, work_cap);
    add_format_option(enumerate, format);
    enumerate->callback(
        [&] { exit_code = cmd_enumerate(enum_base, method, work_cap, format, out, err); });

    auto* construct = app.add_subcommand("construct", "build the canonical number of a base >= 7");
    int construct_base = 0;
    construct->add_option("--base", construct_base, "base to construct for")->required();
    add_format_option(construct, format);
    construct->callback([&] { exit_code = cmd_construct(construct_base, format, out); });

    auto* autobio = app.add_subcommand("autobio", "list the autobiographical numbers of a base");
    int autobio_base = 0;
    autobio->add_option("--base", autobio_base, "display base")->required();
    add_format_option(autobio, format);
    autobio->callback([&] { exit_code = cmd_autobio(autobio_base, format, out); });

    auto* table = app.add_subcommand("table", "per-base counts and members up to a maximum base");
    int table_max = 0;
    table->add_option("--max-base", table_max, "largest base to include")->required();
    add_format_option(table, format);
    table->callback([&] { exit_code = cmd_table(table_max, format, out); });

    auto* crosscheck = app.add_subcommand("crosscheck", "compare oracle and solver over a range");
    int cc_from = 0;
    int cc_to = 0;
    crosscheck->add_option("--from", cc_from, "first base (inclusive)")->required();
    crosscheck->add_option("--to", cc_to, "last base (inclusive)")->required();
    add_work_cap_option(crosscheck, work_cap);
    add_format_option(crosscheck, format);
    crosscheck->callback(
        [&] { exit_code = cmd_crosscheck(cc_from, cc_to, work_cap, format, out); });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("selfdesc");
    for (const auto& arg : args) {
        argv.push_back(arg.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, std::cout, std::cerr);
}

}  // namespace selfdesc::cli
