# Oracle Package