#include "igsim/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace igsim {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!os) throw io_error("cannot open for writing: " + path);
    return os;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_waveforms_csv(const Waveforms& w, const std::string& path) {
    auto os = open_out(path);
    os << "t_s,v_ge_V,v_ce_V,i_c_A,i_g_A\n";
    for (std::size_t i = 0; i < w.size(); ++i) {
        os << format_double(w.time_at(i)) << ',' << format_double(w.v_ge[i]) << ','
           << format_double(w.v_ce[i]) << ',' << format_double(w.i_c[i]) << ','
           << format_double(w.i_g[i]) << '\n';
    }
}

void write_csp_steps_csv(const CspProfile& p, const std::string& path) {
    auto os = open_out(path);
    os << "step_index,amplitude_A,duration_s\n";
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        os << (i + 1) << ',' << format_double(p.steps[i].amplitude) << ','
           << format_double(p.steps[i].duration) << '\n';
    }
}

void write_loss_csv(const LossReport& r, const std::string& path) {
    auto os = open_out(path);
    os << "e_on_J,e_off_J,p_sw_W\n";
    os << format_double(r.e_on) << ',' << format_double(r.e_off) << ',' << format_double(r.p_sw)
       << '\n';
}

void write_signature_csv(const EdgeSignature& s, const std::string& path) {
    auto os = open_out(path);
    os << "t_s,lambda_per_s\n";
    for (std::size_t i = 0; i < s.lambda.size(); ++i) {
        os << format_double(static_cast<double>(i) * s.dt) << ',' << format_double(s.lambda[i])
           << '\n';
    }
}

void write_spectrum_csv(const Spectrum& s, const std::string& path) {
    auto os = open_out(path);
    os << "f_Hz,mag_dbuv,envelope_dbuv\n";
    for (std::size_t i = 0; i < s.f.size(); ++i) {
        os << format_double(s.f[i]) << ',' << format_double(s.mag_db[i]) << ','
           << format_double(s.envelope_db[i]) << '\n';
    }
}

void write_tradeoff_csv(const std::vector<TradeoffRecord>& records, const std::string& path) {
    auto os = open_out(path);
    os << "drive_id,i3_A,p_sw_W,fom,e_on_J,e_off_J\n";
    for (const auto& r : records) {
        os << r.drive_id << ',';
        if (r.i_3) os << format_double(*r.i_3);
        os << ',' << format_double(r.p_sw) << ',' << format_double(r.fom) << ','
           << format_double(r.e_on) << ',' << format_double(r.e_off) << '\n';
    }
}

Waveforms read_edge_csv(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw io_error("cannot open for reading: " + path);

    std::string line;
    if (!std::getline(is, line)) throw io_error("empty CSV: " + path);
    const auto header = split_fields(line);
    std::size_t t_col = 0;
    std::size_t v_col = 1;
    bool found_v = header.size() >= 2;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "t_s") t_col = i;
        if (header[i] == "v_ce_V") {
            v_col = i;
            found_v = true;
        }
    }
    if (!found_v) throw io_error("CSV header lacks a v_ce_V (or second) column: " + path);

    std::vector<double> t;
    std::vector<double> v;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() <= std::max(t_col, v_col)) {
            std::ostringstream os;
            os << path << ":" << line_no << ": expected at least " << std::max(t_col, v_col) + 1
               << " fields";
            throw io_error(os.str());
        }
        try {
            t.push_back(std::stod(fields[t_col]));
            v.push_back(std::stod(fields[v_col]));
        } catch (const std::exception&) {
            std::ostringstream os;
            os << path << ":" << line_no << ": malformed number";
            throw io_error(os.str());
        }
    }
    if (t.size() < 8) throw io_error("CSV carries too few samples: " + path);

    Waveforms w;
    w.t0 = t.front();
    w.dt = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
    if (!(w.dt > 0.0)) throw io_error("CSV time column is not increasing: " + path);
    w.v_ce = std::move(v);
    w.v_ge.assign(w.v_ce.size(), 0.0);
    w.i_c.assign(w.v_ce.size(), 0.0);
    w.i_g.assign(w.v_ce.size(), 0.0);
    w.completed = true;
    return w;
}

}  // namespace igsim
