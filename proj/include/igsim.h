/* igsim — behavioral IGBT switching-transient simulator, C interface.
 *
 * Opaque handles with status-code returns. Every function that can fail
 * returns igsim_status; IGSIM_OK is zero. On failure a thread-local
 * message is available through igsim_last_error().
 */
#ifndef IGSIM_H
#define IGSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define IGSIM_API __declspec(dllexport)
#elif defined(__GNUC__)
#define IGSIM_API __attribute__((visibility("default")))
#else
#define IGSIM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define IGSIM_ABI_VERSION 1u

typedef enum igsim_status {
    IGSIM_OK = 0,
    IGSIM_ERR_DOMAIN = 1,
    IGSIM_ERR_DESIGN = 2,
    IGSIM_ERR_CONFIG = 3,
    IGSIM_ERR_INCOMPLETE_EDGE = 4,
    IGSIM_ERR_PROTOCOL = 5,
    IGSIM_ERR_SIGNATURE = 6,
    IGSIM_ERR_FRAMING = 7,
    IGSIM_ERR_ASSEMBLY = 8,
    IGSIM_ERR_CALIBRATION = 9,
    IGSIM_ERR_IO = 10,
    IGSIM_ERR_ARGUMENT = 11, /* null handle / out pointer */
    IGSIM_ERR_UNKNOWN = 127
} igsim_status;

typedef enum igsim_edge {
    IGSIM_TURN_ON = 0,
    IGSIM_TURN_OFF = 1
} igsim_edge;

typedef enum igsim_channel {
    IGSIM_CH_V_GE = 0,
    IGSIM_CH_V_CE = 1,
    IGSIM_CH_I_C = 2,
    IGSIM_CH_I_G = 3
} igsim_channel;

/* Opaque handles. */
typedef struct igsim_device igsim_device;
typedef struct igsim_profile igsim_profile;
typedef struct igsim_waveforms igsim_waveforms;
typedef struct igsim_signature igsim_signature;

/* Parameter records, SI units throughout. */
typedef struct igsim_device_params {
    double c_ies;        /* F */
    double c_gc;         /* F */
    double g_m;          /* S */
    double v_geth;       /* V */
    double v_ge_max;     /* V */
    double c_gate_total; /* F */
    double c_gc_lowv;    /* F */
} igsim_device_params;

typedef struct igsim_circuit_params {
    double v_bus;    /* V */
    double i_load;   /* A */
    double t_s;      /* s */
    double v_ce_sat; /* V */
} igsim_circuit_params;

typedef struct igsim_sim_params {
    double dt;    /* s, at most 1e-9 */
    double t_max; /* s */
} igsim_sim_params;

typedef struct igsim_csp_inputs {
    double dt_s1;    /* s */
    double alpha;    /* - */
    double i2_ratio; /* - */
    double dt_3;     /* s */
    double i_3;      /* A */
    double dt_4;     /* s */
    double dv_4;     /* V */
    double c_eff2;   /* F */
    double hold;     /* A; pass a negative sentinel IGSIM_HOLD_STEP4 for the default */
} igsim_csp_inputs;

/* hold value meaning "keep the step-4 amplitude after the profile". */
#define IGSIM_HOLD_STEP4 (-1e308)

typedef struct igsim_cats_params {
    double v_int;   /* V */
    double t_int;   /* s */
    double v_final; /* V */
    double v_off;   /* V */
    double t_0;     /* s */
    double v_int0;  /* V */
    double t_int0;  /* s */
    double v_end;   /* V */
    double r_g;     /* Ohm */
} igsim_cats_params;

typedef struct igsim_loss_report {
    double e_on;  /* J */
    double e_off; /* J */
    double p_sw;  /* W */
} igsim_loss_report;

IGSIM_API uint32_t igsim_abi_version(void);
IGSIM_API const char *igsim_version_string(void);

/* Copies the calling thread's last error message (NUL terminated,
 * truncated to len). Returns the untruncated length. */
IGSIM_API size_t igsim_last_error(char *buf, size_t len);

/* ---- devices ---- */
IGSIM_API igsim_status igsim_device_create(const igsim_device_params *params,
                                           igsim_device **out);
IGSIM_API void igsim_device_destroy(igsim_device *dev);

/* ---- gate-drive profiles ---- */
IGSIM_API igsim_status igsim_csp_design(const igsim_device *dev,
                                        const igsim_circuit_params *circuit,
                                        const igsim_csp_inputs *inputs,
                                        igsim_profile **out);
IGSIM_API igsim_status igsim_cats_create(const igsim_cats_params *params,
                                         igsim_profile **out);
IGSIM_API igsim_status igsim_profile_mirror(const igsim_profile *profile,
                                            igsim_profile **out);
IGSIM_API igsim_status igsim_profile_step_count(const igsim_profile *profile, size_t *out);
IGSIM_API igsim_status igsim_profile_step(const igsim_profile *profile, size_t index,
                                          double *amplitude_a, double *duration_s);
/* Piecewise-constant CSP gate current at time t (current profiles only). */
IGSIM_API igsim_status igsim_profile_drive_current(const igsim_profile *profile, double t,
                                                   double *out);
IGSIM_API void igsim_profile_destroy(igsim_profile *profile);

/* ---- transient simulation ---- */
IGSIM_API igsim_status igsim_simulate_edge(const igsim_device *dev,
                                           const igsim_circuit_params *circuit,
                                           const igsim_sim_params *sim,
                                           const igsim_profile *profile, igsim_edge edge,
                                           igsim_waveforms **out);
IGSIM_API igsim_status igsim_waveforms_size(const igsim_waveforms *w, size_t *out);
IGSIM_API igsim_status igsim_waveforms_dt(const igsim_waveforms *w, double *out);
/* Borrow a channel; the pointer stays valid until the handle is destroyed. */
IGSIM_API igsim_status igsim_waveforms_channel(const igsim_waveforms *w, igsim_channel ch,
                                               const double **data, size_t *len);
IGSIM_API igsim_status igsim_waveforms_write_csv(const igsim_waveforms *w, const char *path);
IGSIM_API void igsim_waveforms_destroy(igsim_waveforms *w);

/* ---- analysis ---- */
IGSIM_API igsim_status igsim_switching_energy(const igsim_waveforms *on,
                                              const igsim_waveforms *off,
                                              const igsim_device *dev,
                                              const igsim_circuit_params *circuit,
                                              igsim_loss_report *out);
/* expected_span_v <= 0 derives the traversal span from the samples. */
IGSIM_API igsim_status igsim_edge_signature(const igsim_waveforms *w, double expected_span_v,
                                            igsim_signature **out);
IGSIM_API igsim_status igsim_signature_spreads(const igsim_signature *sig, double *sigma_t,
                                               double *sigma_w);
IGSIM_API igsim_status igsim_fom(const igsim_signature *on, const igsim_signature *off,
                                 double *out);
IGSIM_API void igsim_signature_destroy(igsim_signature *sig);

/* ---- configured runs (the CLI entry point) ---- */
/* experiment: NULL or one of "edge", "sweep", "compare", "fom-on-file".
 * out_dir: NULL keeps the configured directory. dt_override: 0 keeps the
 * configured step. summary receives a one-line result when non-NULL. */
IGSIM_API igsim_status igsim_run_config(const char *config_path, const char *experiment,
                                        const char *out_dir, double dt_override,
                                        char *summary, size_t summary_len);

/* Signature co-spread sigma_t * sigma_w of an edge stored as CSV. */
IGSIM_API igsim_status igsim_fom_of_file(const char *csv_path, double *out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* IGSIM_H */
