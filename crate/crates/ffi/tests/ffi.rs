use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use wavepair_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(wp_last_error_message()) }.to_string_lossy().into_owned()
}

fn sample(family: &str, n: usize) -> (WpStatus, *mut WpSeries) {
    let mut out = ptr::null_mut();
    let st = unsafe { wp_sample_wavelet(c(family).as_ptr(), 0.0, -8.0, 8.0, n, &mut out) };
    (st, out)
}

#[test]
fn sample_hilbert_and_metrics() {
    let (st, psi) = sample("gaus2", 2048);
    assert_eq!(st, WpStatus::Ok);
    unsafe {
        assert_eq!(wp_series_len(psi), 2048);
        assert!(!wp_series_is_complex(psi));

        let mut h = ptr::null_mut();
        assert_eq!(wp_hilbert(psi, &mut h), WpStatus::Ok);
        let (mut e_psi, mut e_h) = (0.0, 0.0);
        assert_eq!(wp_energy(psi, &mut e_psi), WpStatus::Ok);
        assert_eq!(wp_energy(h, &mut e_h), WpStatus::Ok);
        assert!((e_psi - e_h).abs() < 1e-6 * e_psi);

        let mut m = 0u32;
        assert_eq!(wp_vanishing_moments(psi, 8, 1e-5, &mut m), WpStatus::Ok);
        assert_eq!(m, 2);

        let mut adm = 0.0;
        assert_eq!(wp_admissibility(psi, &mut adm), WpStatus::Ok);
        assert!(adm > 0.0);

        wp_series_free(h);
        wp_series_free(psi);
    }
}

#[test]
fn complex_kernel_copies_both_parts() {
    let (_, psi) = sample("mexhat", 512);
    unsafe {
        let mut k = ptr::null_mut();
        assert_eq!(wp_kernel(psi, c("fourier").as_ptr(), &mut k), WpStatus::Ok);
        assert!(wp_series_is_complex(k));
        let mut re = vec![0.0; 512];
        let mut im = vec![0.0; 512];
        assert_eq!(wp_series_copy(k, false, re.as_mut_ptr(), re.len()), WpStatus::Ok);
        assert_eq!(wp_series_copy(k, true, im.as_mut_ptr(), im.len()), WpStatus::Ok);
        let mut p = vec![0.0; 512];
        wp_series_copy(psi, false, p.as_mut_ptr(), p.len());
        for i in 0..512 {
            assert!((re[i] - p[i] / 2f64.sqrt()).abs() < 1e-15);
        }
        assert!(im.iter().any(|v| v.abs() > 1e-3));

        let mut short = vec![0.0; 10];
        assert_eq!(wp_series_copy(k, false, short.as_mut_ptr(), short.len()), WpStatus::BufferTooSmall);

        let mut nested = ptr::null_mut();
        assert_eq!(wp_hilbert(k, &mut nested), WpStatus::InvalidArgument);
        wp_series_free(k);
        wp_series_free(psi);
    }
}

#[test]
fn errors_map_to_codes_and_messages() {
    assert_eq!(sample("haar", 2048).0, WpStatus::InvalidArgument);
    assert!(last_error().contains("haar"));
    assert_eq!(sample("morlet", 2047).0, WpStatus::InvalidGrid);
    assert!(last_error().contains("odd"));

    unsafe {
        let v = vec![1.0; 64];
        let mut x = ptr::null_mut();
        assert_eq!(wp_series_from_real(0.0, 0.1, v.as_ptr(), v.len(), &mut x), WpStatus::Ok);
        let mut adm = 0.0;
        assert_eq!(wp_admissibility(x, &mut adm), WpStatus::NotAdmissible);
        let mut k = ptr::null_mut();
        assert_eq!(wp_kernel(x, c("analytic").as_ptr(), &mut k), WpStatus::NotAdmissible);
        assert!(k.is_null());
        wp_series_free(x);

        let mut e = 0.0;
        assert_eq!(wp_energy(ptr::null(), &mut e), WpStatus::NullPointer);
        assert_eq!(wp_hilbert(ptr::null(), ptr::null_mut()), WpStatus::NullPointer);
        assert_eq!(wp_series_len(ptr::null()), 0);
        wp_series_free(ptr::null_mut());
        wp_scalogram_free(ptr::null_mut());

        let msg = CStr::from_ptr(wp_status_string(WpStatus::BufferTooSmall));
        assert_eq!(msg.to_str().unwrap(), "buffer too small");
    }
}

#[test]
fn cwt_through_handles() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(wp_two_sine(0.0, 1.0, 1000, 5.0, 9.0, &mut f), WpStatus::Ok);
        let mut s = ptr::null_mut();
        let st = wp_cwt(f, c("morlet").as_ptr(), 0.0, c("wavelet").as_ptr(), 1.0, 8.0, 1.0, &mut s);
        assert_eq!(st, WpStatus::Ok);
        let (mut rows, mut cols) = (0, 0);
        assert_eq!(wp_scalogram_shape(s, &mut rows, &mut cols), WpStatus::Ok);
        assert_eq!((rows, cols), (8, 1000));
        let mut buf = vec![0.0; cols];
        assert_eq!(wp_scalogram_copy_row(s, 7, WpPart::Real, buf.as_mut_ptr(), cols), WpStatus::Ok);
        assert!(buf.iter().any(|v| *v != 0.0));
        assert_eq!(wp_scalogram_copy_row(s, 8, WpPart::Real, buf.as_mut_ptr(), cols), WpStatus::InvalidArgument);
        assert_eq!(wp_scalogram_copy_row(s, 0, WpPart::Imag, buf.as_mut_ptr(), cols), WpStatus::Ok);
        assert!(buf.iter().all(|v| *v == 0.0));
        let hz = wp_scalogram_frequency(s, 8.0);
        assert!((hz - 5.0 / (2.0 * std::f64::consts::PI) / 8e-3).abs() < 1e-9);

        let bad = wp_cwt(f, c("morlet").as_ptr(), 0.0, c("wavelet").as_ptr(), 8.0, 1.0, 1.0, &mut s);
        assert_eq!(bad, WpStatus::InvalidArgument);

        wp_scalogram_free(s);
        wp_series_free(f);

        let mut g = ptr::null_mut();
        assert_eq!(wp_freq_breakdown(0.0, 1.0, 1000, 5.0, 50.0, 2.0, &mut g), WpStatus::InvalidArgument);
    }
}

/// Compile `tests/c/smoke.c` against the generated header and the static
/// library, then run it.
#[test]
fn c_program_links_against_static_library() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libwavepair_ffi.a");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if !lib.exists() || Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or static library at {}", lib.display());
        return;
    }
    let exe = profile_dir.join("wavepair_ffi_smoke");
    let status = Command::new(&cc)
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&lib)
        .args(["-lm", "-lpthread", "-ldl", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("rows=32 cols=1000"), "{text}");
}
