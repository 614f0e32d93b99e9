use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const TRIANGLE: &str = r#"{"vertices":[0,1,2],"edges":[{"id":0,"a":0,"b":1},{"id":1,"a":1,"b":2},{"id":2,"a":2,"b":0}]}"#;
const THETA: &str = r#"{"vertices":[0,1],"edges":[{"id":0,"a":0,"b":1},{"id":1,"a":0,"b":1},{"id":2,"a":0,"b":1}]}"#;
const IDENTITY3: &str = r#"{"map":{"0":0,"1":1,"2":2}}"#;
const TREFOIL: &str = "X 1 4 2 5 -1\nX 3 6 4 1 -1\nX 5 2 6 3 -1\n";

// two triangles sharing vertex 0, and the same triangles sharing 0 ~ 4
const BOWTIE: &str = r#"{"vertices":[0,1,2,3,4],"edges":[
 {"id":0,"a":0,"b":1},{"id":1,"a":1,"b":2},{"id":2,"a":2,"b":0},
 {"id":3,"a":0,"b":3},{"id":4,"a":3,"b":4},{"id":5,"a":4,"b":0}]}"#;
const BOWTIE_MOVED: &str = r#"{"vertices":[0,1,2,3,4],"edges":[
 {"id":0,"a":0,"b":1},{"id":1,"a":1,"b":2},{"id":2,"a":2,"b":0},
 {"id":3,"a":1,"b":3},{"id":4,"a":3,"b":4},{"id":5,"a":4,"b":1}]}"#;
const IDENTITY6: &str = r#"{"map":{"0":0,"1":1,"2":2,"3":3,"4":4,"5":5}}"#;

struct Sandbox(TempDir);

impl Sandbox {
    fn new() -> Self {
        Sandbox(tempfile::tempdir().unwrap())
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let p = self.0.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }
}

fn duality(args: &[&dyn AsRef<std::ffi::OsStr>]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_duality")).args(args.iter().map(|a| a.as_ref())).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn p(path: &Path) -> &std::ffi::OsStr {
    path.as_os_str()
}

#[test]
fn dual_of_triangle_is_theta() {
    let sb = Sandbox::new();
    let tri = sb.file("tri.json", TRIANGLE);
    let emb = duality(&[&"dual", &p(&tri)]);
    assert_eq!(code(&emb), 0);
    let out = json(&emb);
    assert_eq!(out["dual"]["vertices"].as_array().unwrap().len(), 2);
    assert_eq!(out["dual"]["edges"].as_array().unwrap().len(), 3);
    assert_eq!(out["duality_map"]["map"]["1"], 1);

    // the dual's embedding round-trips through --embedding back to a triangle
    let e = sb.file("dual_emb.json", &serde_json::to_string(&out["embedding"]).unwrap());
    let back = duality(&[&"dual", &"--embedding", &p(&e)]);
    assert_eq!(code(&back), 0);
    assert_eq!(json(&back)["dual"]["vertices"].as_array().unwrap().len(), 3);
}

#[test]
fn map_checks_exit_codes() {
    let sb = Sandbox::new();
    let (tri, theta, id) = (sb.file("t.json", TRIANGLE), sb.file("h.json", THETA), sb.file("m.json", IDENTITY3));
    assert_eq!(code(&duality(&[&"check-adual", &p(&tri), &p(&theta), &p(&id)])), 0);
    // the ranks differ, so no 2-isomorphism
    let out = duality(&[&"check-2iso", &p(&tri), &p(&theta), &p(&id)]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["result"], false);
    assert_eq!(code(&duality(&[&"find-map", &"--mode", &"adual", &p(&tri), &p(&theta)])), 0);
    let none = duality(&[&"find-map", &"--mode", &"2iso", &p(&tri), &p(&theta)]);
    assert_eq!((code(&none), json(&none)), (1, serde_json::Value::Null));
}

#[test]
fn bad_input_exits_2_naming_the_field() {
    let sb = Sandbox::new();
    let bad = sb.file("bad.json", r#"{"vertices":[0,1],"edges":[{"id":0,"a":0,"b":1,"sign":3}]}"#);
    let out = duality(&[&"blocks", &p(&bad)]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("edges[0].sign"), "{err}");
    let missing = duality(&[&"blocks", &p(&sb.path("nope.json"))]);
    assert_eq!(code(&missing), 2);
    let unsigned = sb.file("u.json", TRIANGLE);
    assert_eq!(code(&duality(&[&"goeritz", &p(&unsigned)])), 2);
}

#[test]
fn chain_then_verify_in_separate_process() {
    let sb = Sandbox::new();
    let (g, h, f) = (sb.file("g.json", BOWTIE), sb.file("h.json", BOWTIE_MOVED), sb.file("f.json", IDENTITY6));
    let out = sb.path("chain.json");
    let made = duality(&[&"chain", &"--mode", &"2iso", &p(&g), &p(&h), &p(&f), &"--output", &p(&out)]);
    assert_eq!(code(&made), 0, "{}", String::from_utf8_lossy(&made.stderr));
    let chain: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(chain["maps"].as_array().unwrap().len() % 2, 0);
    assert_eq!(code(&duality(&[&"verify", &p(&out)])), 0);

    // a tampered expected map no longer verifies
    let tampered = std::fs::read_to_string(&out).unwrap().replacen("\"expected\": {", "\"expected\": {\"junk\": 0, ", 1);
    let t = sb.file("tampered.json", &tampered);
    assert_eq!(code(&duality(&[&"verify", &p(&t)])), 2);
    let mut v = chain.clone();
    v["expected"]["map"]["0"] = 1.into();
    v["expected"]["map"]["1"] = 0.into();
    let t = sb.file("swapped.json", &v.to_string());
    assert_eq!(code(&duality(&[&"verify", &p(&t)])), 1);
}

#[test]
fn adual_chain_verifies() {
    let sb = Sandbox::new();
    let (g, h, f) = (sb.file("g.json", TRIANGLE), sb.file("h.json", THETA), sb.file("f.json", IDENTITY3));
    let out = sb.path("chain.json");
    assert_eq!(code(&duality(&[&"chain", &"--mode", &"adual", &p(&g), &p(&h), &p(&f), &"--output", &p(&out)])), 0);
    assert_eq!(code(&duality(&[&"verify", &p(&out)])), 0);
    // a non-duality is a false claim
    assert_eq!(code(&duality(&[&"chain", &"--mode", &"2iso", &p(&g), &p(&h), &p(&f)])), 1);
    assert_eq!(code(&duality(&[&"chain", &"--max-edges", &"2", &"--mode", &"adual", &p(&g), &p(&h), &p(&f)])), 2);
}

#[test]
fn knot_commands() {
    let sb = Sandbox::new();
    let t = sb.file("trefoil.pd", TREFOIL);
    let cb = duality(&[&"checkerboard", &p(&t)]);
    assert_eq!(code(&cb), 0);
    let boards = json(&cb);
    let shaded = sb.file("shaded.json", &boards["shaded"].to_string());
    let g = duality(&[&"goeritz", &p(&shaded)]);
    assert_eq!(code(&g), 0);
    assert_eq!(json(&g)["determinant"].as_i64().unwrap().abs(), 3);

    let medial = duality(&[&"medial", &p(&shaded), &"--pd"]);
    assert_eq!(code(&medial), 0);
    let pd = String::from_utf8(medial.stdout).unwrap();
    assert_eq!(pd.lines().count(), 3);
    assert!(pd.lines().all(|l| l.starts_with("X ")));

    let id = sb.file("id.json", IDENTITY3);
    let chain = duality(&[&"diagram-chain", &p(&t), &"shaded", &p(&t), &"shaded", &p(&id)]);
    assert_eq!(code(&chain), 0);
    assert_eq!(json(&chain)["diagrams"].as_array().unwrap().len(), 0);
}

#[test]
fn corpus_and_determinism() {
    let sb = Sandbox::new();
    let one = duality(&[&"gen-corpus", &"--max-edges", &"4", &"--jobs", &"1"]);
    let four = duality(&[&"gen-corpus", &"--max-edges", &"4", &"--jobs", &"4"]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    // connected multigraphs with loops on at most 4 edges: 1 + 2 + 4 + 11 + 30
    assert_eq!(json(&one).as_array().unwrap().len(), 48);
    assert_eq!(code(&duality(&[&"gen-corpus", &"--max-edges", &"20"])), 2);

    let (g, h, f) = (sb.file("g.json", BOWTIE), sb.file("h.json", BOWTIE_MOVED), sb.file("f.json", IDENTITY6));
    let a = duality(&[&"chain", &"--mode", &"2iso", &p(&g), &p(&h), &p(&f)]);
    let b = duality(&[&"chain", &"--mode", &"2iso", &p(&g), &p(&h), &p(&f)]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}
