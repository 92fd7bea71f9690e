# Calculus Package