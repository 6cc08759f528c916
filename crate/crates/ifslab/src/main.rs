fn main() {
    std::process::exit(ifslab::run());
}
