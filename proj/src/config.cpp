#include "igsim/config.hpp"

#include "igsim/csv.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace igsim {

namespace {

struct Entry {
    std::string value;
    int line = 0;
    bool used = false;
};

struct Section {
    std::string name;
    int line = 0;
    std::map<std::string, Entry> entries;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& what) {
    std::ostringstream os;
    os << origin << ":" << line << ": " << what;
    throw config_error(os.str());
}

double parse_double(const std::string& origin, int line, const std::string& key,
                    const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        fail(origin, line, "key '" + key + "': expected a number, got '" + value + "'");
    }
}

std::vector<double> parse_list(const std::string& origin, int line, const std::string& key,
                               const std::string& value) {
    std::vector<double> out;
    std::string token;
    std::istringstream is(value);
    std::string normalized = value;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream ns(normalized);
    while (ns >> token) out.push_back(parse_double(origin, line, key, token));
    if (out.empty()) fail(origin, line, "key '" + key + "': expected a list of numbers");
    return out;
}

/// Typed access to one section with default tracking and unknown-key checks.
class Resolver {
public:
    Resolver(const std::string& origin, Section* section, std::string prefix,
             std::vector<std::string>* resolved)
        : origin_(origin), section_(section), prefix_(std::move(prefix)), resolved_(resolved) {}

    double number(const std::string& key, double fallback) {
        if (Entry* e = find(key)) {
            const double v = parse_double(origin_, e->line, key, e->value);
            note(key, format_double(v), false);
            return v;
        }
        note(key, format_double(fallback), true);
        return fallback;
    }

    std::string text(const std::string& key, const std::string& fallback) {
        if (Entry* e = find(key)) {
            note(key, e->value, false);
            return e->value;
        }
        note(key, fallback.empty() ? "(unset)" : fallback, true);
        return fallback;
    }

    std::vector<double> list(const std::string& key, const std::vector<double>& fallback) {
        if (Entry* e = find(key)) {
            const auto v = parse_list(origin_, e->line, key, e->value);
            note(key, e->value, false);
            return v;
        }
        std::string joined;
        for (std::size_t i = 0; i < fallback.size(); ++i)
            joined += (i ? ", " : "") + format_double(fallback[i]);
        note(key, joined, true);
        return fallback;
    }

    Entry* find(const std::string& key) {
        if (!section_) return nullptr;
        auto it = section_->entries.find(key);
        if (it == section_->entries.end()) return nullptr;
        it->second.used = true;
        return &it->second;
    }

    int line(const std::string& key) const {
        if (!section_) return 0;
        auto it = section_->entries.find(key);
        return it == section_->entries.end() ? section_->line : it->second.line;
    }

    void finish() const {
        if (!section_) return;
        for (const auto& [key, entry] : section_->entries) {
            if (!entry.used)
                fail(origin_, entry.line, "unknown key '" + key + "' in section [" +
                                              section_->name + "]");
        }
    }

    const std::string& origin() const { return origin_; }

private:
    void note(const std::string& key, const std::string& value, bool defaulted) {
        resolved_->push_back(prefix_ + key + " = " + value + (defaulted ? " (default)" : ""));
    }

    std::string origin_;
    Section* section_;
    std::string prefix_;
    std::vector<std::string>* resolved_;
};

DriveConfig resolve_drive(const std::string& origin, Section& sec, const DeviceParams& dev,
                          std::vector<std::string>* resolved) {
    const std::string name = trim(sec.name.substr(std::string("drive").size()));
    if (name.empty()) fail(origin, sec.line, "drive section needs a name: [drive <name>]");
    Resolver r(origin, &sec, "drive." + name + ".", resolved);

    const std::string type = r.text("type", "csp");
    DriveConfig drive;
    drive.name = name;
    if (type == "csp") {
        CspDesignInputs in;
        in.dt_s1 = r.number("dt_s1", in.dt_s1);
        in.alpha = r.number("alpha", in.alpha);
        in.i2_ratio = r.number("i2_ratio", in.i2_ratio);
        in.dt_3 = r.number("dt_3", in.dt_3);
        in.i_3 = r.number("i_3", in.i_3);
        in.dt_4 = r.number("dt_4", in.dt_4);
        in.dv_4 = r.number("dv_4", in.dv_4);
        in.c_eff2 = r.number("c_eff2", in.c_eff2);
        const std::string hold = r.text("hold", "i4");
        if (hold == "zero")
            in.hold_current = 0.0;
        else if (hold != "i4")
            in.hold_current = parse_double(origin, r.line("hold"), "hold", hold);
        drive.spec = in;
    } else if (type == "cats") {
        CatsProfile c;
        c.v_int = r.number("v_int", c.v_int);
        c.t_int = r.number("t_int", c.t_int);
        c.v_final = r.number("v_final", dev.v_ge_max);
        c.v_off = r.number("v_off", c.v_off);
        c.t_0 = r.number("t_0", c.t_0);
        c.v_int0 = r.number("v_int0", c.v_int0);
        c.t_int0 = r.number("t_int0", c.t_int0);
        c.v_end = r.number("v_end", c.v_end);
        c.r_g = r.number("r_g", c.r_g);
        drive.spec = c;
    } else if (type == "plain") {
        PlainDrive p;
        p.v_on = r.number("v_on", dev.v_ge_max);
        p.v_off = r.number("v_off", p.v_off);
        p.r_g = r.number("r_g", p.r_g);
        drive.spec = p;
    } else {
        fail(origin, r.line("type"), "drive '" + name + "': unknown type '" + type +
                                         "' (expected csp, cats or plain)");
    }
    r.finish();
    return drive;
}

}  // namespace

std::string to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::edge: return "edge";
        case ExperimentKind::sweep: return "sweep";
        case ExperimentKind::compare: return "compare";
        case ExperimentKind::fom_on_file: return "fom-on-file";
    }
    return "?";
}

const DriveConfig* RunConfig::find_drive(const std::string& name) const {
    for (const auto& d : drives)
        if (d.name == name) return &d;
    return nullptr;
}

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
    std::vector<Section> sections;
    std::map<std::string, std::size_t> index;

    std::istringstream is(text);
    std::string raw;
    int line_no = 0;
    std::size_t current = std::string::npos;
    while (std::getline(is, raw)) {
        ++line_no;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(origin, line_no, "unterminated section header");
            const std::string name = trim(line.substr(1, line.size() - 2));
            if (name.empty()) fail(origin, line_no, "empty section header");
            auto it = index.find(name);
            if (it != index.end()) fail(origin, line_no, "duplicate section [" + name + "]");
            index[name] = sections.size();
            sections.push_back({name, line_no, {}});
            current = sections.size() - 1;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(origin, line_no, "expected 'key = value'");
        if (current == std::string::npos) fail(origin, line_no, "key outside any [section]");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(origin, line_no, "empty key");
        auto& entries = sections[current].entries;
        if (entries.count(key))
            fail(origin, line_no, "duplicate key '" + key + "' in section [" +
                                      sections[current].name + "]");
        entries[key] = {value, line_no, false};
    }

    auto section_ptr = [&](const std::string& name) -> Section* {
        auto it = index.find(name);
        return it == index.end() ? nullptr : &sections[it->second];
    };

    RunConfig cfg;

    Resolver dev_r(origin, section_ptr("device"), "device.", &cfg.resolved);
    cfg.device.c_ies = dev_r.number("c_ies", cfg.device.c_ies);
    cfg.device.c_gc = dev_r.number("c_gc", cfg.device.c_gc);
    cfg.device.g_m = dev_r.number("g_m", cfg.device.g_m);
    cfg.device.v_geth = dev_r.number("v_geth", cfg.device.v_geth);
    cfg.device.v_ge_max = dev_r.number("v_ge_max", cfg.device.v_ge_max);
    cfg.device.c_gate_total = dev_r.number("c_gate_total", cfg.device.c_gate_total);
    cfg.device.c_gc_lowv = dev_r.number("c_gc_lowv", cfg.device.c_gc_lowv);
    dev_r.finish();

    Resolver circ_r(origin, section_ptr("circuit"), "circuit.", &cfg.resolved);
    cfg.circuit.v_bus = circ_r.number("v_bus", cfg.circuit.v_bus);
    cfg.circuit.i_load = circ_r.number("i_load", cfg.circuit.i_load);
    cfg.circuit.t_s = circ_r.number("t_s", cfg.circuit.t_s);
    cfg.circuit.v_ce_sat = circ_r.number("v_ce_sat", cfg.circuit.v_ce_sat);
    circ_r.finish();

    Resolver sim_r(origin, section_ptr("sim"), "sim.", &cfg.resolved);
    cfg.sim.dt = sim_r.number("dt", cfg.sim.dt);
    cfg.sim.t_max = sim_r.number("t_max", cfg.sim.t_max);
    sim_r.finish();

    std::set<std::string> seen_drives;
    for (auto& sec : sections) {
        if (sec.name.rfind("drive", 0) != 0) continue;
        DriveConfig d = resolve_drive(origin, sec, cfg.device, &cfg.resolved);
        if (!seen_drives.insert(d.name).second)
            fail(origin, sec.line, "duplicate drive name '" + d.name + "'");
        cfg.drives.push_back(std::move(d));
    }

    Resolver exp_r(origin, section_ptr("experiment"), "experiment.", &cfg.resolved);
    const std::string kind = exp_r.text("kind", "edge");
    if (kind == "edge")
        cfg.experiment.kind = ExperimentKind::edge;
    else if (kind == "sweep")
        cfg.experiment.kind = ExperimentKind::sweep;
    else if (kind == "compare")
        cfg.experiment.kind = ExperimentKind::compare;
    else if (kind == "fom-on-file")
        cfg.experiment.kind = ExperimentKind::fom_on_file;
    else
        fail(origin, exp_r.line("kind"),
             "unknown experiment kind '" + kind + "' (expected edge, sweep, compare, fom-on-file)");
    cfg.experiment.drive = exp_r.text("drive", "");
    cfg.experiment.i3_values = exp_r.list("i3_values", cfg.experiment.i3_values);
    cfg.experiment.duty = exp_r.number("duty", cfg.experiment.duty);
    cfg.experiment.cats_drive = exp_r.text("cats_drive", "");
    const std::string target = exp_r.text("target_loss", "cats");
    if (target != "cats")
        cfg.experiment.target_loss =
            parse_double(origin, exp_r.line("target_loss"), "target_loss", target);
    cfg.experiment.bounds.lo = exp_r.number("i3_min", cfg.experiment.bounds.lo);
    cfg.experiment.bounds.hi = exp_r.number("i3_max", cfg.experiment.bounds.hi);
    cfg.experiment.input = exp_r.text("input", "");
    exp_r.finish();

    Resolver out_r(origin, section_ptr("output"), "output.", &cfg.resolved);
    cfg.output_dir = out_r.text("dir", cfg.output_dir);
    out_r.finish();

    for (const auto& sec : sections) {
        if (sec.name.rfind("drive", 0) == 0) continue;
        static const std::set<std::string> known{"device", "circuit", "sim", "experiment",
                                                 "output"};
        if (!known.count(sec.name)) fail(origin, sec.line, "unknown section [" + sec.name + "]");
    }

    cfg.device.validate();
    cfg.circuit.validate();
    cfg.sim.validate();
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw config_error("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << is.rdbuf();
    return parse_config_text(buffer.str(), path);
}

}  // namespace igsim
