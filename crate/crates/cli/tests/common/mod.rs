#![allow(dead_code)]

use std::process::Command;

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn solidcone_with(args: &[&str], threads: Option<usize>) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_solidcone"));
    cmd.args(args).env_remove("SOLIDCONE_THREADS");
    if let Some(t) = threads {
        cmd.env("SOLIDCONE_THREADS", t.to_string());
    }
    let out = cmd.output().expect("binary runs");
    Run {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().expect("exit code"),
    }
}

pub fn solidcone(args: &[&str]) -> Run {
    solidcone_with(args, None)
}

pub fn json(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.push("--json");
    let r = solidcone(&full);
    serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{e}: {}", r.stdout))
}

pub const FCC3: &str = "[1,1/2,1/2;1,1/2;1]";
pub const FCC4: &str = "[1,1/2,1/2,1/2;1,1/2,1/2;1,1/2;1]";
pub const FCC0_5: &str = "[1,0,1/2,1/2,1/2;1,1/2,1/2,1/2;1,1/2,1/2;1,1/2;1]";
