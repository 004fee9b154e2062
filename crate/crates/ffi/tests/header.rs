use std::path::{Path, PathBuf};
use std::process::Command;

fn header() -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/zeta_recur.h");
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn header_declares_the_abi() {
    let h = header();
    for decl in [
        "typedef struct ZrRational ZrRational;",
        "ZR_STATUS_OK = 0,",
        "ZR_STATUS_NULL_POINTER = 1,",
        "ZR_STATUS_NO_CONVERGENCE = 4,",
        "ZR_IDENTITY_ODD = 8,",
        "enum ZrStatus zr_zeta_even_recursive(uint64_t n, struct ZrRational **out);",
        "void zr_rational_free(struct ZrRational *r);",
        "void zr_string_free(char *s);",
        "const char *zr_last_error_message(void);",
        "struct ZrIdentityReport *out);",
        "double side_re[4];",
    ] {
        assert!(h.contains(decl), "missing {decl:?}");
    }
    assert!(h.starts_with("#ifndef ZETA_RECUR_H"));
}

fn target_dir() -> PathBuf {
    // target/<profile>/deps/<this test>
    std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf()
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "zeta_recur.h"

int main(void) {
    ZrRational *a = NULL, *b = NULL;
    bool eq = false;
    if (zr_zeta_even_recursive(40, &a) != ZR_STATUS_OK) return 1;
    if (zr_zeta_even_euler(40, &b) != ZR_STATUS_OK) return 2;
    if (zr_rational_equal(a, b, &eq) != ZR_STATUS_OK || !eq) return 3;
    char *s = NULL;
    zr_rational_to_string(a, &s);
    printf("%s\n", s);
    zr_string_free(s);
    zr_rational_free(a);
    zr_rational_free(b);

    if (zr_zeta_even_recursive(0, &a) != ZR_STATUS_INVALID_ARGUMENT) return 4;
    if (zr_last_error_message() == NULL) return 5;

    ZrIdentityReport r;
    if (zr_verify(ZR_IDENTITY_EQ2, 2, 1e-9, 30.0, &r) != ZR_STATUS_OK || !r.passed) return 6;
    printf("%.9f\n", r.lhs_re);
    return 0;
}
"#;

#[test]
fn c_program_links_against_static_library() {
    let dir = target_dir();
    let lib = dir.join("libzeta_recur_ffi.a");
    assert!(lib.exists(), "static library not built at {}", lib.display());
    let work = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ffi_c_test");
    std::fs::create_dir_all(&work).unwrap();
    let src = work.join("main.c");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let exe = work.join("main");
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&exe)
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lm", "-lpthread", "-ldl"])
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].contains('/'));
    assert_eq!(lines[1], "1.644934067");
}
