fn main() {
    std::process::exit(ptbath::run(std::env::args_os()));
}
