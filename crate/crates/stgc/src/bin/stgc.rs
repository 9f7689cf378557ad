fn main() {
    // CLI wired up after the engine lands
}
