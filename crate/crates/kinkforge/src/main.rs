fn main() {
    std::process::exit(kinkforge_cli_main());
}

fn kinkforge_cli_main() -> i32 {
    eprintln!("cli not wired yet");
    2
}
