package org.demo.kitchen;

public class Spice {
    private Pantry pantry;
    private Ingredient ingredient;
    private Recipe recipe;

    public Spice(Pantry pantry, Ingredient ingredient, Recipe recipe) {
        this.pantry = pantry;
        this.ingredient = ingredient;
        this.recipe = recipe;
    }

    public int pepperHeat() {
        return 5;
    }

    public int saffronThreads() {
        return 20;
    }

    public Pantry pantry() {
        return pantry;
    }
}
