"""Command-line surface: one subcommand per experiment, each writing data files plus a manifest."""
