//! Compiles a C program against the generated header and links it with the
//! static library.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "hamsets.h"

int main(void) {
    HsDow *word = NULL;
    HsGraph *graph = NULL;
    uint64_t count = 0;
    char *text = NULL;
    if (hs_dow_parse("112323", &word) != HS_STATUS_OK) return 10;
    if (hs_graph_build(word, &graph) != HS_STATUS_OK) return 11;
    if (hs_graph_count_hamiltonian_sets(graph, &count) != HS_STATUS_OK) return 12;
    if (hs_dow_render(word, &text) != HS_STATUS_OK) return 13;
    printf("%s %llu\n", text, (unsigned long long)count);
    hs_string_free(text);
    hs_graph_free(graph);
    hs_dow_free(word);

    HsDow *bad = NULL;
    if (hs_dow_parse("12", &bad) != HS_STATUS_INVALID_WORD) return 14;
    if (hs_last_error_message() == NULL) return 15;
    return 0;
}
"#;

#[test]
fn c_program_links_against_static_library() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let library = profile_dir.join("libhamsets_ffi.a");
    assert!(library.exists(), "missing {}", library.display());

    let work = tempfile::tempdir().unwrap();
    let source = work.path().join("main.c");
    let binary = work.path().join("main");
    std::fs::write(&source, PROGRAM).unwrap();

    let compiler = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(compiler)
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&source)
        .arg(&library)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&binary)
        .status()
        .expect("C compiler available");
    assert!(status.success());

    let output = Command::new(&binary).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&output.stdout), "112323 7\n");
}
