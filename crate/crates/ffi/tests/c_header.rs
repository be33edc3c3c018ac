//! Compiles a small C program against the generated header and the static library.

use std::path::PathBuf;
use std::process::Command;

fn target_dir() -> PathBuf {
    // .../target/<profile>/deps/<test binary>
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "essence.h"

int main(void) {
    EssTerm *t = NULL, *n = NULL;
    char *s = NULL;
    size_t steps = 0;
    if (ess_parse("lc", "(\\x. x) ((\\y. y) z)", &t) != ESS_STATUS_OK) return 10;
    if (ess_normalize(t, NULL, 0, &n, &steps) != ESS_STATUS_OK) return 11;
    if (ess_print(n, &s) != ESS_STATUS_OK) return 12;
    if (strcmp(s, "z") != 0 || steps == 0) return 13;
    ess_string_free(s);
    ess_term_free(n);
    ess_term_free(t);
    if (ess_parse("lc", "\\x. )", &t) != ESS_STATUS_USAGE) return 14;
    if (strstr(ess_last_error_message(), "1:5") == NULL) return 15;
    puts("ok");
    return 0;
}
"#;

#[test]
fn header_compiles_and_links() {
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    assert!(include.join("essence.h").exists());
    let lib = target_dir().join("libessence_ffi.a");
    if !lib.exists() {
        eprintln!("skipping: {} not built", lib.display());
        return;
    }
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = dir.join("ffi_smoke.c");
    let bin = dir.join("ffi_smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let built = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .output();
    let built = match built {
        Ok(o) => o,
        Err(e) => {
            eprintln!("skipping: no C compiler ({e})");
            return;
        }
    };
    assert!(built.status.success(), "{}", String::from_utf8_lossy(&built.stderr));
    let run = Command::new(&bin).output().unwrap();
    assert_eq!(run.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
