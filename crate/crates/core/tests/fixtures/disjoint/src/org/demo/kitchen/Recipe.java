package org.demo.kitchen;

public class Recipe {
    private Ingredient ingredient;
    private Oven oven;
    private Chef chef;
    private Spice spice;
    private Pantry pantry;
    private Skillet skillet;

    public Recipe(Ingredient ingredient, Oven oven, Chef chef) {
        this.ingredient = ingredient;
        this.oven = oven;
        this.chef = chef;
    }

    public int servingPortions() {
        return 4;
    }

    public int bakeMinutes() {
        return 35;
    }

    public Ingredient ingredient() {
        return ingredient;
    }
}
