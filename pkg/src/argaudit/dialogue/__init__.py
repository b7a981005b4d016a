"""Information-seeking dialogues: moves, execution, validation and AF extraction."""
