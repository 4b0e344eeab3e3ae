// Placeholder main; subcommands land once the pipeline modules are in.
int main() { return 0; }
