#pragma once

#include "igsim/analysis.hpp"
#include "igsim/experiments.hpp"

#include <string>
#include <vector>

namespace igsim {

/// Shortest round-trip decimal representation (deterministic across runs).
std::string format_double(double v);

// All writers emit UTF-8 with LF line endings and a decimal point, no
// thousands separators.

/// Header: t_s,v_ge_V,v_ce_V,i_c_A,i_g_A
void write_waveforms_csv(const Waveforms& w, const std::string& path);

/// Header: step_index,amplitude_A,duration_s
void write_csp_steps_csv(const CspProfile& p, const std::string& path);

/// Header: e_on_J,e_off_J,p_sw_W (single data row)
void write_loss_csv(const LossReport& r, const std::string& path);

/// Header: t_s,lambda_per_s
void write_signature_csv(const EdgeSignature& s, const std::string& path);

/// Header: f_Hz,mag_dbuv,envelope_dbuv
void write_spectrum_csv(const Spectrum& s, const std::string& path);

/// Header: drive_id,i3_A,p_sw_W,fom,e_on_J,e_off_J (i3_A empty for CATS)
void write_tradeoff_csv(const std::vector<TradeoffRecord>& records, const std::string& path);

/// Reads a waveform-style CSV (any header with t_s and v_ce_V columns, or
/// a bare two-column t_s,v_ce_V file) into a Waveforms record carrying the
/// v_ce channel; dt is inferred from the time column.
Waveforms read_edge_csv(const std::string& path);

}  // namespace igsim
