#include "arason/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "arason/lab.hpp"

namespace arason::cli {

namespace {

constexpr char const* kVersion = "0.1.0";

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Json load(std::string const& arg)
{
    std::string text = arg;
    std::string where = "argument";
    auto first = arg.find_first_not_of(" \t\n");
    bool inline_json = first != std::string::npos &&
                       (arg[first] == '{' || arg[first] == '[' || arg[first] == '"' || arg[first] == '-' ||
                        std::isdigit((unsigned char)arg[first]));
    if (!inline_json) {
        std::ifstream in(arg);
        if (!in)
            throw UsageError("cannot read file \"" + arg + "\"");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
        where = arg;
    }
    try {
        return Json::parse(text);
    } catch (Json::parse_error const& e) {
        throw UsageError("malformed JSON in " + where + " at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

void need(std::vector<std::string> const& args, std::size_t n, std::string const& usage)
{
    if (args.size() != n)
        throw UsageError("expected " + std::to_string(n) + " argument(s): " + usage);
}

Json opt_factor(std::optional<SquareClass> const& f) { return f ? to_json(*f) : Json(nullptr); }

Json rel_json(RelArasonValue const& v) { return to_json(v.value); }

using Handler = std::function<Json(std::vector<std::string> const&)>;

std::map<std::string, Handler> qform_ops()
{
    auto q = [](std::string const& s) { return quad_form_from_json(load(s)); };
    return {
        {"profile", [=](auto const& a) { need(a, 1, "qform profile Q"); return to_json(profile(q(a[0]))); }},
        {"isotropic", [=](auto const& a) { need(a, 1, "qform isotropic Q"); return Json{{"isotropic", is_isotropic(q(a[0]))}}; }},
        {"witt", [=](auto const& a) { need(a, 1, "qform witt Q"); return Json{{"witt_index", witt_index(q(a[0]))}}; }},
        {"isometric",
         [=](auto const& a) {
             need(a, 2, "qform isometric Q1 Q2");
             return Json{{"isometric", is_isometric(q(a[0]), q(a[1]))}};
         }},
        {"similar",
         [=](auto const& a) {
             need(a, 2, "qform similar Q1 Q2");
             auto f = is_similar(q(a[0]), q(a[1]));
             return Json{{"similar", f.has_value()}, {"factor", opt_factor(f)}};
         }},
        {"e1", [=](auto const& a) { need(a, 1, "qform e1 Q"); return Json{{"e1", to_json(e1(q(a[0])))}}; }},
        {"e2", [=](auto const& a) { need(a, 1, "qform e2 Q"); return Json{{"e2", to_json(e2(q(a[0])))}}; }},
        {"e3", [=](auto const& a) { need(a, 1, "qform e3 Q"); return Json{{"e3", to_json(e3(q(a[0])))}}; }},
    };
}

std::map<std::string, Handler> herm_ops()
{
    auto h = [](std::string const& s) { return herm_form_from_json(load(s)); };
    return {
        {"trace", [=](auto const& a) { need(a, 1, "herm trace H"); return to_json(trace_form(h(a[0]))); }},
        {"disc",
         [=](auto const& a) {
             need(a, 1, "herm disc H");
             HermForm x = h(a[0]);
             return Json{{"disc", to_json(disc_value(x))}, {"delta", to_json(x.delta())}};
         }},
        {"discalg",
         [=](auto const& a) {
             need(a, 1, "herm discalg H");
             return Json{{"disc_algebra", to_json(disc_algebra_h(h(a[0])))}};
         }},
        {"isometric",
         [=](auto const& a) {
             need(a, 2, "herm isometric H1 H2");
             return Json{{"isometric", is_isometric_h(h(a[0]), h(a[1]))}};
         }},
        {"similar",
         [=](auto const& a) {
             need(a, 2, "herm similar H1 H2");
             auto f = is_similar_h(h(a[0]), h(a[1]));
             return Json{{"similar", f.has_value()}, {"factor", opt_factor(f)}};
         }},
        {"hyperbolic",
         [=](auto const& a) {
             need(a, 1, "herm hyperbolic H");
             HermForm x = h(a[0]);
             return Json{{"hyperbolic", is_hyperbolic_h(x)}, {"witt_index", witt_index_h(x)}};
         }},
    };
}

std::map<std::string, Handler> unitary_ops()
{
    auto u = [](std::string const& s) { return unitary_from_json(load(s)); };
    auto scal = [](std::string const& s) { return square_class_from_json(load(s)); };
    auto qf = [](std::string const& s) { return quad_form_from_json(load(s)); };
    return {
        {"rel-e3", [=](auto const& a) { need(a, 2, "unitary rel-e3 T0 T"); return rel_json(rel_arason(u(a[0]), u(a[1]))); }},
        {"e3-hyp", [=](auto const& a) { need(a, 1, "unitary e3-hyp T"); return rel_json(e3_hyp(u(a[0]))); }},
        {"e3-td", [=](auto const& a) { need(a, 1, "unitary e3-td T"); return rel_json(e3_td(u(a[0]))); }},
        {"f3", [=](auto const& a) { need(a, 2, "unitary f3 T0 T"); return Json{{"f3", to_json(f3(u(a[0]), u(a[1])))}}; }},
        {"theta",
         [=](auto const& a) {
             if (a.size() != 2 && a.size() != 3)
                 throw UsageError("expected 2 or 3 arguments: unitary theta T0 T [LAMBDA]");
             UnitaryInv t0 = u(a[0]), t = u(a[1]);
             SquareClass l = a.size() == 3 ? scal(a[2]) : t.degree() % 2 ? split_theta_scalar(t0, t) : SquareClass{};
             Json j = to_json(theta_lambda(t0, t, l));
             j["lambda"] = to_json(l);
             return j;
         }},
        {"rank2",
         [=](auto const& a) {
             need(a, 2, "unitary rank2 T0 LAMBDA");
             UnitaryInv t0 = u(a[0]);
             SquareClass l = scal(a[1]);
             auto r = rank2_factor(t0, l);
             Json j = to_json(r.involution);
             j["e3_hyp"] = to_json(r.value);
             j["cup"] = to_json(h3_cup(l, disc_algebra(t0)));
             return j;
         }},
        {"classify",
         [=](auto const& a) {
             need(a, 2, "unitary classify T0 T");
             UnitaryInv t0 = u(a[0]), t = u(a[1]);
             bool iso = false;
             switch (t.degree()) {
             case 3: iso = classify_deg3(t0, t); break;
             case 4: iso = classify_deg4(t0, t); break;
             case 6: iso = classify_deg6(t0, t); break;
             default:
                 throw PreconditionError("classification by the relative invariant covers degrees 3, 4 and 6");
             }
             return Json{{"degree", t.degree()}, {"isomorphic", iso}};
         }},
        {"hyperbolic",
         [=](auto const& a) {
             need(a, 1, "unitary hyperbolic T");
             return Json{{"hyperbolic", is_hyperbolic_deg6(u(a[0]))}};
         }},
        {"decompose",
         [=](auto const& a) {
             need(a, 1, "unitary decompose T");
             auto d = dec_deg8(u(a[0]));
             static const char* names[] = {"similar", "not_similar", "witness_not_found"};
             Json slots = Json::array();
             for (auto const& s : d.slots)
                 slots.push_back(to_json(s));
             return Json{{"decision", d.decision}, {"outcome", names[(int)d.outcome]}, {"slots", slots}};
         }},
        {"symp-descent",
         [=](auto const& a) {
             need(a, 4, "unitary symp-descent PHI0 PHI A DELTA");
             auto r = symp_descent_e3(qf(a[0]), qf(a[1]), scal(a[2]), scal(a[3]));
             return Json{{"direct", to_json(r.direct)}, {"relative", rel_json(r.relative)}};
         }},
        {"orth-descent",
         [=](auto const& a) {
             need(a, 3, "unitary orth-descent Q0 Q DELTA");
             auto r = orth_descent_rel(qf(a[0]), qf(a[1]), scal(a[2]));
             return Json{{"direct", to_json(r.direct)}, {"relative", rel_json(r.relative)}};
         }},
        {"quad-ext",
         [=](auto const& a) {
             need(a, 1, "unitary quad-ext H");
             auto r = quad_ext_check(herm_form_from_json(load(a[0])));
             return Json{{"rank", r.rank},
                         {"trace_profile", to_json(r.trace_profile)},
                         {"predicted_disc", to_json(r.predicted_disc)},
                         {"predicted_clifford", to_json(r.predicted_clifford)},
                         {"disc_ok", r.disc_ok},
                         {"clifford_ok", r.clifford_ok},
                         {"e2_ok", r.e2_ok},
                         {"ok", r.ok()}};
         }},
    };
}

void emit(std::ostream& out, Json const& j, std::string const& format)
{
    if (format == "json") {
        out << j.dump() << "\n";
        return;
    }
    if (!j.is_object()) {
        out << j.dump() << "\n";
        return;
    }
    for (auto const& [k, v] : j.items())
        out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

std::string op_list(std::map<std::string, Handler> const& ops)
{
    std::string s;
    for (auto const& [k, _] : ops)
        s += (s.empty() ? "" : "|") + k;
    return s;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Invariants of quadratic forms and unitary involutions over Q"};
    app.name(args.empty() ? "arason" : args[0]);
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    std::map<std::string, std::map<std::string, Handler>> groups{
        {"qform", qform_ops()}, {"herm", herm_ops()}, {"unitary", unitary_ops()}};
    std::map<std::string, std::pair<std::string, std::vector<std::string>>> calls;
    for (auto& [name, ops] : groups) {
        auto* sub = app.add_subcommand(name, name + " operations: " + op_list(ops));
        sub->fallthrough();
        auto& slot = calls[name];
        sub->add_option("op", slot.first, op_list(ops))->required();
        sub->add_option("args", slot.second, "JSON inputs (inline or file paths)");
    }

    std::string check_name;
    lab::GenConfig cfg;
    std::vector<std::size_t> degrees;
    std::string replay_arg;
    bool no_timing = false;
    auto* check = app.add_subcommand("check", "run a property check ('list' prints the names)");
    check->fallthrough();
    check->add_option("name", check_name)->required();
    check->add_option("--seed", cfg.seed, "random seed");
    check->add_option("--trials", cfg.trials, "number of instances")->check(CLI::PositiveNumber);
    check->add_option("--height", cfg.height_bound, "max |entry|")->check(CLI::PositiveNumber);
    check->add_option("--degrees", degrees, "degrees to cycle through")->delimiter(',');
    check->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
    check->add_option("--replay", replay_arg, "re-run the law on one serialized instance");
    check->add_flag("--no-timing", no_timing, "omit elapsed_ms for byte-identical reports");
    auto* version = app.add_subcommand("version", "print version");

    std::vector<char const*> argv;
    for (auto const& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (CLI::CallForHelp const& e) {
        out << app.help();
        return kOk;
    } catch (CLI::CallForAllHelp const& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (CLI::ParseError const& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (version->parsed()) {
            emit(out, Json{{"version", kVersion}}, format);
            return kOk;
        }
        if (check->parsed()) {
            if (check_name == "list") {
                emit(out, Json{{"checks", lab::check_names()}}, format);
                return kOk;
            }
            if (!lab::is_check(check_name))
                throw UsageError("unknown check \"" + check_name + "\"");
            if (!replay_arg.empty()) {
                auto msg = lab::replay(check_name, load(replay_arg));
                emit(out, Json{{"check", check_name}, {"failure", msg ? Json(*msg) : Json(nullptr)}}, format);
                return msg ? kCheckFailed : kOk;
            }
            cfg.degrees = degrees;
            auto rep = lab::run_check(check_name, cfg);
            emit(out, lab::to_json(rep, !no_timing), format);
            return rep.passed() ? kOk : kCheckFailed;
        }
        for (auto& [name, ops] : groups) {
            if (!app.got_subcommand(name))
                continue;
            auto const& [op, rest] = calls[name];
            auto it = ops.find(op);
            if (it == ops.end())
                throw UsageError("unknown " + name + " operation \"" + op + "\"; expected " + op_list(ops));
            emit(out, it->second(rest), format);
            return kOk;
        }
    } catch (UsageError const& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (FormatError const& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (PreconditionError const& e) {
        err << "precondition violated: " << e.what() << "\n";
        return kPrecondition;
    } catch (ConsistencyError const& e) {
        err << "consistency failure: " << e.what() << "\n";
        return kCheckFailed;
    }
    err << "usage error: no command\n";
    return kUsage;
}

}  // namespace arason::cli
