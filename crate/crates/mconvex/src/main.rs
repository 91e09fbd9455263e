fn main() {
    println!("mconvex CLI placeholder");
}
