fn main() {
    std::process::exit(segre_core::lab::main_from_args(std::env::args_os()));
}
